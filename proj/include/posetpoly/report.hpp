#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "posetpoly/family.hpp"
#include "posetpoly/oracle.hpp"
#include "posetpoly/simplex_data.hpp"

namespace posetpoly {

/// "C(3)", "A(2)", or an explicit cover list like "poset{5: 0<2 1<2 2<3 2<4}".
inline std::string describe_poset(const Poset& p) { return detail::leaf_label(p); }

/// One row of scan/eval output: everything the library knows about a poset.
/// Oracle f-vectors and verdicts are only present when those passes ran.
struct ReportRecord {
  std::string description;
  int n = 0;
  bool x_free = true;
  bool family_f = true;
  SPoly s_order, s0_order, s1_order;
  SPoly s_chain, s0_chain, s1_chain;
  int max_simplex_order = -1;
  int max_simplex_chain = -1;
  int height = 0;
  Int linear_extensions = 1;

  struct Verdicts {
    PolyLeVerdict main_le;            // order S <= chain S
    bool equal = false;               // order S == chain S
    PolyLeVerdict origin_chain_le;    // chain S0 <= order S0
    PolyLeVerdict origin_bound_order; // order S0 <= x * order S1
    PolyLeVerdict origin_bound_chain; // chain S0 <= x * chain S1
    std::optional<bool> abcd_ok;      // only run under the main-le hypothesis
  };
  std::optional<Verdicts> verdicts;

  std::optional<std::vector<Int>> f_order, f_chain;  // from f_{-1} upward
};

inline ReportRecord make_report(std::string description, const Poset& p, bool with_oracle) {
  PosetSimplexData d = compute_simplex_data(p);
  ReportRecord r;
  r.description = std::move(description);
  r.n = d.n;
  r.x_free = d.x_free;
  r.family_f = d.in_family;
  r.s_order = d.order.s;
  r.s0_order = d.order.s0;
  r.s1_order = d.order.s1;
  r.s_chain = d.chain.s;
  r.s0_chain = d.chain.s0;
  r.s1_chain = d.chain.s1;
  r.max_simplex_order = d.order.s.degree() - 1;
  r.max_simplex_chain = d.chain.s.degree() - 1;
  r.height = p.height();
  r.linear_extensions = p.linear_extension_count();

  ReportRecord::Verdicts v;
  MainVerdict main = check_main(d);
  v.main_le = main.le;
  v.equal = main.equal;
  v.origin_chain_le = poly_le(d.chain.s0, d.order.s0);
  v.origin_bound_order = poly_le(d.order.s0, d.order.s1.shifted_up());
  v.origin_bound_chain = poly_le(d.chain.s0, d.chain.s1.shifted_up());
  if (main.le.ok) v.abcd_ok = check_origin_split_inequalities(d).all_ok();
  r.verdicts = v;

  if (with_oracle) {
    auto vo = vertex_points(p, PolytopeKind::order);
    auto vc = vertex_points(p, PolytopeKind::chain);
    r.f_order = face_lattice(vo, h_rep(p, PolytopeKind::order)).f_vector();
    r.f_chain = face_lattice(vc, h_rep(p, PolytopeKind::chain)).f_vector();
  }
  return r;
}

namespace detail {

inline std::string join_ints(const std::vector<Int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].str();
  }
  return s;
}

inline std::string poly_csv(const SPoly& p) { return join_ints(p.coeffs(), ";"); }

}  // namespace detail

inline void write_human(const ReportRecord& r, std::ostream& os) {
  os << "poset: " << r.description << "\n";
  os << "  n: " << r.n << "  x_free: " << (r.x_free ? "yes" : "no")
     << "  family_f: " << (r.family_f ? "yes" : "no") << "  height: " << r.height
     << "  linear_extensions: " << r.linear_extensions << "\n";
  os << "  S(order)  = " << r.s_order << "\n";
  os << "  S0(order) = " << r.s0_order << "\n";
  os << "  S1(order) = " << r.s1_order << "\n";
  os << "  S(chain)  = " << r.s_chain << "\n";
  os << "  S0(chain) = " << r.s0_chain << "\n";
  os << "  S1(chain) = " << r.s1_chain << "\n";
  os << "  max_simplex_dim: order " << r.max_simplex_order << ", chain " << r.max_simplex_chain
     << "\n";
  if (r.verdicts) {
    const auto& v = *r.verdicts;
    os << "  verdicts: main_le " << (v.main_le.ok ? "ok" : "FAIL") << " | equal "
       << (v.equal ? "yes" : "no") << " | origin_chain_le "
       << (v.origin_chain_le.ok ? "ok" : "FAIL") << " | origin_bounds "
       << (v.origin_bound_order.ok && v.origin_bound_chain.ok ? "ok" : "FAIL") << " | abcd "
       << (!v.abcd_ok ? "skipped" : *v.abcd_ok ? "ok" : "FAIL") << "\n";
  }
  if (r.f_order) os << "  f(order) = (" << detail::join_ints(*r.f_order, ", ") << ")\n";
  if (r.f_chain) os << "  f(chain) = (" << detail::join_ints(*r.f_chain, ", ") << ")\n";
}

inline nlohmann::json to_json(const ReportRecord& r) {
  nlohmann::json j{{"description", r.description},
                   {"n", r.n},
                   {"x_free", r.x_free},
                   {"family_f", r.family_f},
                   {"s_order", to_json(r.s_order)},
                   {"s0_order", to_json(r.s0_order)},
                   {"s1_order", to_json(r.s1_order)},
                   {"s_chain", to_json(r.s_chain)},
                   {"s0_chain", to_json(r.s0_chain)},
                   {"s1_chain", to_json(r.s1_chain)},
                   {"max_simplex_dim_order", r.max_simplex_order},
                   {"max_simplex_dim_chain", r.max_simplex_chain},
                   {"height", r.height},
                   {"linear_extensions", r.linear_extensions.str()}};
  if (r.verdicts) {
    const auto& v = *r.verdicts;
    j["verdicts"] = {{"main_le", v.main_le.ok},
                     {"equal", v.equal},
                     {"origin_chain_le", v.origin_chain_le.ok},
                     {"origin_bound_order", v.origin_bound_order.ok},
                     {"origin_bound_chain", v.origin_bound_chain.ok}};
    if (v.abcd_ok) j["verdicts"]["abcd"] = *v.abcd_ok;
    if (!v.main_le.ok) j["verdicts"]["main_le_first_violation"] = v.main_le.first_violation;
  }
  auto ints_to_json = [](const std::vector<Int>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& c : v) arr.push_back(c.str());
    return arr;
  };
  if (r.f_order) j["f_order"] = ints_to_json(*r.f_order);
  if (r.f_chain) j["f_chain"] = ints_to_json(*r.f_chain);
  return j;
}

inline std::string csv_header() {
  return "description,n,x_free,family_f,s_order,s0_order,s1_order,s_chain,s0_chain,s1_chain,"
         "max_simplex_dim_order,max_simplex_dim_chain,height,linear_extensions,"
         "main_le,equal,origin_chain_le,origin_bound_order,origin_bound_chain,abcd,"
         "f_order,f_chain";
}

inline std::string to_csv_row(const ReportRecord& r) {
  std::ostringstream os;
  os << '"' << r.description << '"' << ',' << r.n << ',' << (r.x_free ? 1 : 0) << ','
     << (r.family_f ? 1 : 0) << ',' << detail::poly_csv(r.s_order) << ','
     << detail::poly_csv(r.s0_order) << ',' << detail::poly_csv(r.s1_order) << ','
     << detail::poly_csv(r.s_chain) << ',' << detail::poly_csv(r.s0_chain) << ','
     << detail::poly_csv(r.s1_chain) << ',' << r.max_simplex_order << ',' << r.max_simplex_chain
     << ',' << r.height << ',' << r.linear_extensions.str();
  if (r.verdicts) {
    const auto& v = *r.verdicts;
    os << ',' << (v.main_le.ok ? 1 : 0) << ',' << (v.equal ? 1 : 0) << ','
       << (v.origin_chain_le.ok ? 1 : 0) << ',' << (v.origin_bound_order.ok ? 1 : 0) << ','
       << (v.origin_bound_chain.ok ? 1 : 0) << ',';
    if (v.abcd_ok) os << (*v.abcd_ok ? 1 : 0);
  } else {
    os << ",,,,,,";
  }
  os << ',' << (r.f_order ? detail::join_ints(*r.f_order, ";") : "");
  os << ',' << (r.f_chain ? detail::join_ints(*r.f_chain, ";") : "");
  return os.str();
}

}  // namespace posetpoly
