#pragma once

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "posetpoly/catalog.hpp"
#include "posetpoly/report.hpp"

namespace posetpoly::cli {

struct Options {
  bool json = false;
  bool csv = false;
  bool oracle = false;
  bool force = false;
  int max_n = 12;

  bool oracle_for(int n) const { return oracle && (n <= 6 || force); }
};

namespace detail {

/// Contracts every record must satisfy no matter the poset; a violation is
/// a counterexample to a proven statement, i.e. a bug or a discovery.
inline std::vector<std::string> contract_failures(const ReportRecord& r) {
  std::vector<std::string> bad;
  if (!r.verdicts) return bad;
  const auto& v = *r.verdicts;
  if (r.family_f && !v.main_le.ok) bad.push_back("family poset violates the main inequality");
  if (r.family_f && v.equal != r.x_free)
    bad.push_back("family poset breaks equality-iff-x-free");
  if (r.x_free && !v.equal) bad.push_back("x-free poset with different polynomials");
  if (!r.x_free && v.equal) bad.push_back("equal polynomials on a non-x-free poset");
  if (!v.origin_chain_le.ok) bad.push_back("chain origin polynomial exceeds the order one");
  if (!v.origin_bound_order.ok || !v.origin_bound_chain.ok)
    bad.push_back("origin simplices exceed shifted off-origin simplices");
  if (v.abcd_ok && !*v.abcd_ok) bad.push_back("origin-split inequality chain fails");
  if (r.s_order[2] != r.s_chain[2]) bad.push_back("edge counts differ");
  if (r.s_order[3] > r.s_chain[3]) bad.push_back("two-dimensional simplex inequality fails");
  return bad;
}

inline std::string failure_note(const ReportRecord& r) {
  std::string s;
  for (const auto& f : contract_failures(r)) s += "CHECK FAILED [" + r.description + "]: " + f + "\n";
  return s;
}

template <typename Fn>
inline void parallel_for(std::size_t count, Fn&& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t nthreads = std::min<std::size_t>(std::max(hw, 1u), count);
  nthreads = std::min<std::size_t>(nthreads, 8);
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

/// Pass/fail bookkeeping for verify: counts per check name, remembers the
/// first few failing contexts.
class CheckCollector {
 public:
  void record(const std::string& name, const std::string& context, bool ok) {
    auto& item = items_[name];
    if (ok) {
      ++item.passes;
      return;
    }
    ++failures_;
    ++item.failures;
    if (item.contexts.size() < 5) item.contexts.push_back(context);
  }

  std::size_t failures() const { return failures_; }

  /// Folds another collector in, keeping context order stable when callers
  /// merge per-work-item collectors in input order.
  void merge(const CheckCollector& other) {
    for (const auto& [name, item] : other.items_) {
      auto& mine = items_[name];
      mine.passes += item.passes;
      mine.failures += item.failures;
      for (const auto& c : item.contexts)
        if (mine.contexts.size() < 5) mine.contexts.push_back(c);
    }
    failures_ += other.failures_;
  }

  void emit(std::ostream& os) const {
    for (const auto& [name, item] : items_) {
      if (item.failures == 0) {
        os << "ok   " << name << " (" << item.passes << ")\n";
      } else {
        os << "FAIL " << name << " (" << item.failures << " of "
           << item.failures + item.passes << "):";
        for (const auto& c : item.contexts) os << " [" << c << "]";
        os << "\n";
      }
    }
  }

 private:
  struct Item {
    std::size_t passes = 0;
    std::size_t failures = 0;
    std::vector<std::string> contexts;
  };
  std::map<std::string, Item> items_;
  std::size_t failures_ = 0;
};

inline std::vector<int> sorted_pair(int a, int b) { return a < b ? std::vector{a, b} : std::vector{b, a}; }

inline void verify_oracle_side(const Poset& p, PolytopeKind kind, const SkeletonGraph& skel,
                               const SimplexPolys& polys, const std::string& ctx,
                               CheckCollector& cc) {
  std::string side = kind_name(kind);
  auto verts = vertex_points(p, kind);
  FaceLattice fl = face_lattice(verts, h_rep(p, kind));
  SimplexPolys op = oracle_simplex_polys(fl, verts);
  cc.record("oracle." + side + ".simplex_polys_match", ctx,
            op.s == polys.s && op.s0 == polys.s0 && op.s1 == polys.s1);
  cc.record("oracle." + side + ".euler", ctx, fl.euler_ok());
  cc.record("oracle." + side + ".affine_dim_is_n", ctx,
            affine_dim(verts) == p.size());
  cc.record("oracle." + side + ".f0_matches_vertices", ctx,
            fl.face_count(0) == skel.vertex_count());

  std::set<std::vector<int>> oracle_edges;
  for (const Face& f : fl.faces)
    if (f.dim == 1 && f.vertices.size() == 2) oracle_edges.insert(f.vertices);
  std::set<std::vector<int>> skel_edges;
  for (int i = 0; i < skel.vertex_count(); ++i)
    for (int j = i + 1; j < skel.vertex_count(); ++j)
      if (skel.adjacent(i, j)) skel_edges.insert(sorted_pair(i, j));
  cc.record("oracle." + side + ".edges_match", ctx, oracle_edges == skel_edges);
}

inline void verify_poset(const Poset& p, const std::string& ctx, const Options& opt,
                         CheckCollector& cc) {
  cc.record("poset.valid", ctx, p.valid());
  cc.record("poset.dual_involution", ctx, p.dual().dual() == p);

  auto filters = p.filters();
  auto antichains = p.antichains();
  cc.record("counts.filters_eq_antichains", ctx, filters.size() == antichains.size());

  {
    auto dual_filters = p.dual().filters();
    std::vector<Subset> complements;
    complements.reserve(filters.size());
    for (Subset f : filters) complements.push_back(p.all().minus(f));
    std::ranges::sort(complements);
    cc.record("dual.filters_are_complements", ctx, dual_filters == complements);
  }
  cc.record("dual.linear_extensions", ctx,
            p.linear_extension_count() == p.dual().linear_extension_count());

  SkeletonGraph order_skel = build_skeleton(p, PolytopeKind::order);
  SkeletonGraph chain_skel = build_skeleton(p, PolytopeKind::chain);
  PosetSimplexData d;
  d.n = p.size();
  d.x_free = p.x_free();
  d.in_family = family_f_membership(p).has_value();
  d.order = simplex_polys(order_skel);
  d.chain = simplex_polys(chain_skel);

  cc.record("split.total_is_origin_plus_rest", ctx,
            d.order.s == d.order.s0 + d.order.s1 && d.chain.s == d.chain.s0 + d.chain.s1);
  {
    // Degree stays within dim + 1 and tops out exactly on simplices, i.e.
    // when the vertex count is dim + 1.
    bool ok = true;
    for (const SimplexPolys* side : {&d.order, &d.chain}) {
      ok = ok && side->s.degree() <= p.size() + 1;
      ok = ok && ((side->s.degree() == p.size() + 1) == (side->s[1] == p.size() + 1));
    }
    cc.record("split.degree_bound", ctx, ok);
  }
  cc.record("edges.order_equals_chain", ctx, d.order.s[2] == d.chain.s[2]);
  cc.record("ineq.chain_origin_le_order_origin", ctx, poly_le(d.chain.s0, d.order.s0).ok);
  cc.record("ineq.origin_le_shifted_offorigin", ctx,
            poly_le(d.order.s0, d.order.s1.shifted_up()).ok &&
                poly_le(d.chain.s0, d.chain.s1.shifted_up()).ok);
  cc.record("ineq.two_dim_simplices", ctx, d.order.s[3] <= d.chain.s[3]);

  {
    PosetSimplexData dd = compute_simplex_data(p.dual());
    cc.record("dual.spolys_invariant", ctx,
              dd.order.s == d.order.s && dd.chain.s == d.chain.s &&
                  dd.chain.s0 == d.chain.s0 && dd.chain.s1 == d.chain.s1);
    cc.record("dual.family_closed", ctx, dd.in_family == d.in_family);
  }

  MainVerdict main = check_main(d);
  cc.record("family.main_inequality", ctx, !main.in_family || main.le.ok);
  cc.record("family.equality_iff_x_free", ctx, !main.in_family || main.equal == main.x_free);
  cc.record("xfree.polynomials_equal", ctx, !main.x_free || main.equal);
  if (main.le.ok)
    cc.record("ineq.origin_split_chain", ctx, check_origin_split_inequalities(d).all_ok());

  // Both polytopes carry a simplex the size of the longest chain: the chain
  // side directly, the order side through the lifted principal filters.
  cc.record("bound.chain_simplex_dim_ge_height", ctx, d.chain.s.degree() - 1 >= p.height());
  cc.record("bound.order_simplex_dim_ge_height", ctx, d.order.s.degree() - 1 >= p.height());
  cc.record("bound.family_chain_dim_ge_order_dim", ctx,
            !main.in_family || d.chain.s.degree() >= d.order.s.degree());

  // The injection behind the origin-simplex inequality, exercised literally.
  if (d.chain.s0.coefficient_sum() <= 20000) {
    bool ok = true;
    std::set<std::vector<std::uint64_t>> images;
    auto origin_cliques = list_origin_cliques(chain_skel);
    for (const auto& clique : origin_cliques) {
      std::vector<Subset> vertices;
      vertices.reserve(clique.size());
      for (int idx : clique) vertices.push_back(chain_skel.vertices[static_cast<std::size_t>(idx)]);
      std::vector<Subset> lifted = lift_origin_simplex(p, vertices);
      if (lifted.size() != vertices.size()) ok = false;
      std::vector<std::uint64_t> sig;
      sig.reserve(lifted.size());
      for (Subset s : lifted) sig.push_back(s.bits());
      if (!images.insert(sig).second) ok = false;  // not injective
      for (std::size_t i = 0; i < lifted.size() && ok; ++i)
        for (std::size_t j = i + 1; j < lifted.size() && ok; ++j)
          if (!is_edge(p, PolytopeKind::order, lifted[i], lifted[j])) ok = false;
      if (!ok) break;
    }
    cc.record("lift.injective_into_order_simplices", ctx, ok);
  }

  if (opt.oracle_for(p.size())) {
    verify_oracle_side(p, PolytopeKind::order, order_skel, d.order, ctx, cc);
    verify_oracle_side(p, PolytopeKind::chain, chain_skel, d.chain, ctx, cc);
  }
}

/// Structural recursion checks on every internal node of an expression.
inline void verify_expr_recursions(const PosetExpr& e, CheckCollector& cc) {
  for (const PosetExpr& child : e.children) verify_expr_recursions(child, cc);
  if (e.kind != PosetExpr::Kind::ordinal_sum && e.kind != PosetExpr::Kind::disjoint_union)
    return;
  std::string ctx = to_string(e);
  Poset whole = elaborate(e);
  PosetSimplexData direct = compute_simplex_data(whole);
  PosetSimplexData a = compute_simplex_data(elaborate(e.children[0]));
  PosetSimplexData b = compute_simplex_data(elaborate(e.children[1]));
  if (e.kind == PosetExpr::Kind::ordinal_sum) {
    PosetSimplexData b_dual = compute_simplex_data(elaborate(e.children[1]).dual());
    cc.record("recursion.ordinal_order_total", ctx,
              ordinal_sum_spoly(PolytopeKind::order, a, b_dual) == direct.order.s);
    cc.record("recursion.ordinal_chain_total", ctx,
              ordinal_sum_spoly(PolytopeKind::chain, a, b) == direct.chain.s);
  } else {
    ProductPolys po = product_spoly(a, b, PolytopeKind::order);
    ProductPolys pc = product_spoly(a, b, PolytopeKind::chain);
    cc.record("recursion.product_order", ctx,
              po.s == direct.order.s && po.s0 == direct.order.s0);
    cc.record("recursion.product_chain", ctx,
              pc.s == direct.chain.s && pc.s0 == direct.chain.s0);
  }
}

}  // namespace detail

inline int run_eval(const std::string& expr_text, const Options& opt, std::ostream& out,
                    std::ostream& err) {
  PosetExpr expr = parse_expr(expr_text, kMaxElements);
  Poset p = elaborate(expr);
  if (p.size() > opt.max_n) {
    err << "poset has " << p.size() << " elements, above the evaluation bound of " << opt.max_n
        << " (raise with --max-n)\n";
    return 2;
  }
  ReportRecord r = make_report(expr_text, p, opt.oracle_for(p.size()));
  if (opt.json) {
    out << to_json(r).dump() << "\n";
  } else if (opt.csv) {
    out << csv_header() << "\n" << to_csv_row(r) << "\n";
  } else {
    write_human(r, out);
  }
  std::string note = detail::failure_note(r);
  if (!note.empty()) {
    err << note;
    return 1;
  }
  return 0;
}

inline int run_family(const std::string& expr_text, std::ostream& out) {
  PosetExpr expr = parse_expr(expr_text, kMaxElements);
  Poset p = elaborate(expr);
  auto tree = family_f_membership(p);
  if (!tree) {
    out << "not in F\n";
    return 0;
  }
  out << decomposition_to_string(*tree, p) << "\n";
  if (auto as_expr = decomposition_to_expression(*tree, p))
    out << "expression: " << *as_expr << "\n";
  return 0;
}

inline int run_verify(const std::string& expr_text, int all_n, const Options& opt,
                      std::ostream& out, std::ostream& err) {
  detail::CheckCollector cc;
  if (!expr_text.empty()) {
    PosetExpr expr = parse_expr(expr_text, kMaxElements);
    Poset p = elaborate(expr);
    if (p.size() > opt.max_n) {
      err << "poset has " << p.size() << " elements, above the evaluation bound of " << opt.max_n
          << " (raise with --max-n)\n";
      return 2;
    }
    detail::verify_poset(p, expr_text, opt, cc);
    detail::verify_expr_recursions(expr, cc);
    ChainPolys rec = chain_spolys_recursive(expr);
    SimplexPolys direct = simplex_polys(build_skeleton(p, PolytopeKind::chain));
    cc.record("recursion.chain_structural", expr_text,
              rec.s0 == direct.s0 && rec.s1 == direct.s1);
  } else {
    const int cap = opt.force ? 10 : 7;
    for (int n = 0; n <= all_n; ++n) {
      std::vector<Poset> catalog = enumerate_posets_upto_iso(n, cap);
      std::vector<detail::CheckCollector> partial(catalog.size());
      detail::parallel_for(catalog.size(), [&](std::size_t i) {
        detail::verify_poset(catalog[i], describe_poset(catalog[i]), opt, partial[i]);
      });
      // Merge in catalog order so failure contexts stay deterministic.
      for (const auto& part : partial) cc.merge(part);
    }
  }
  cc.emit(out);
  if (cc.failures() > 0) {
    err << cc.failures() << " check failure(s)\n";
    return 1;
  }
  out << "all checks passed\n";
  return 0;
}

inline int run_scan(int all_n, const std::vector<std::string>& random_args, const Options& opt,
                    std::ostream& out, std::ostream& err) {
  std::vector<Poset> posets;
  std::vector<std::string> descriptions;
  std::vector<std::size_t> class_counts;  // per size, for --all
  if (all_n >= 0) {
    const int cap = opt.force ? 10 : 7;
    for (int n = 0; n <= all_n; ++n) {
      std::vector<Poset> catalog = enumerate_posets_upto_iso(n, cap);
      class_counts.push_back(catalog.size());
      for (Poset& p : catalog) {
        descriptions.push_back(describe_poset(p));
        posets.push_back(std::move(p));
      }
    }
  } else {
    long long count = std::stoll(random_args[0]);
    int size = std::stoi(random_args[1]);
    std::uint64_t seed = static_cast<std::uint64_t>(std::stoull(random_args[2]));
    if (count < 0 || size < 0 || size > opt.max_n)
      throw std::invalid_argument("scan --random: bad COUNT/SIZE (SIZE obeys --max-n)");
    for (long long i = 0; i < count; ++i) {
      std::uint64_t s = seed + static_cast<std::uint64_t>(i);
      Poset p = random_poset(size, s);
      descriptions.push_back("seed:" + std::to_string(s) + " " + describe_poset(p));
      posets.push_back(std::move(p));
    }
  }

  std::vector<ReportRecord> records(posets.size());
  detail::parallel_for(posets.size(), [&](std::size_t i) {
    records[i] = make_report(descriptions[i], posets[i], opt.oracle_for(posets[i].size()));
  });

  if (opt.csv) out << csv_header() << "\n";
  std::size_t equal_count = 0, strict_count = 0, outside_family = 0, contract_violations = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ReportRecord& r = records[i];
    if (opt.json)
      out << to_json(r).dump() << "\n";
    else if (opt.csv)
      out << to_csv_row(r) << "\n";
    else
      write_human(r, out);
    if (r.verdicts->equal)
      ++equal_count;
    else if (r.verdicts->main_le.ok)
      ++strict_count;
    if (!r.family_f) ++outside_family;
    if (r.family_f && !r.verdicts->main_le.ok) {
      err << "counterexample to the main inequality:\n" << to_json(r).dump() << "\n";
      return 1;
    }
    auto bad = detail::contract_failures(r);
    contract_violations += bad.size();
    for (const auto& b : bad) err << "CHECK FAILED [" << r.description << "]: " << b << "\n";
  }

  std::ostream& summary_os = opt.csv ? err : out;
  if (opt.json) {
    nlohmann::json s{{"records", records.size()},
                     {"equal", equal_count},
                     {"strict", strict_count},
                     {"outside_family", outside_family}};
    if (!class_counts.empty()) s["classes_per_size"] = class_counts;
    summary_os << nlohmann::json{{"summary", s}}.dump() << "\n";
  } else {
    summary_os << "summary: " << records.size() << " posets";
    if (!class_counts.empty()) {
      summary_os << " (classes per size:";
      for (std::size_t n = 0; n < class_counts.size(); ++n)
        summary_os << " " << n << ":" << class_counts[n];
      summary_os << ")";
    }
    summary_os << ", equal " << equal_count << ", strict " << strict_count
               << ", outside family " << outside_family << "\n";
  }
  return contract_violations == 0 ? 0 : 1;
}

/// Entry point shared by the binary and the tests. Returns the process exit
/// status: 0 clean, 1 check failure, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"simplex-face polynomials of order and chain polytopes"};
  app.name("posetpoly");
  Options opt;
  std::string expr_text;
  int all_n = -1;
  std::vector<std::string> random_args;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "emit one JSON record per line");
    sub->add_flag("--csv", opt.csv, "emit CSV (polynomials as ';'-joined coefficients)");
    sub->add_flag("--oracle", opt.oracle,
                  "cross-check against the geometric face lattice (auto-capped at n <= 6)");
    sub->add_flag("--force", opt.force, "lift the oracle and catalog size guards");
    sub->add_option("--max-n", opt.max_n, "largest poset size accepted for evaluation");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate one poset expression");
  eval->add_option("expr", expr_text, "poset expression, e.g. \"A(2) < C(1)\"")->required();
  add_common(eval);

  CLI::App* verify = app.add_subcommand("verify", "run the identity and oracle checks");
  verify->add_option("expr", expr_text, "poset expression");
  verify->add_option("--all", all_n, "verify every poset with at most N elements");
  add_common(verify);

  CLI::App* scan = app.add_subcommand("scan", "stream report records over a catalog");
  scan->add_option("--all", all_n, "all isomorphism classes with at most N elements");
  scan->add_option("--random", random_args, "COUNT SIZE SEED")->expected(3);
  add_common(scan);

  CLI::App* family = app.add_subcommand("family", "decompose into the recursive family");
  family->add_option("expr", expr_text, "poset expression")->required();

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("posetpoly");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return run_eval(expr_text, opt, out, err);
    if (family->parsed()) return run_family(expr_text, out);
    if (verify->parsed()) {
      if (expr_text.empty() == (all_n < 0)) {
        err << "verify needs exactly one of EXPR or --all N\n";
        return 2;
      }
      return run_verify(expr_text, all_n, opt, out, err);
    }
    if (scan->parsed()) {
      if ((all_n >= 0) == !random_args.empty()) {
        err << "scan needs exactly one of --all N or --random COUNT SIZE SEED\n";
        return 2;
      }
      return run_scan(all_n, random_args, opt, out, err);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace posetpoly::cli
