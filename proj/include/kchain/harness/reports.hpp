#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "kchain/closed_forms.hpp"
#include "kchain/harness/serialize.hpp"
#include "kchain/harness/table.hpp"
#include "kchain/spectral.hpp"

namespace kchain::harness {

inline std::string multiset_text(const Multiset& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [value, count] : m) {
    if (!first) out += ", ";
    out += to_string(value) + ":" + std::to_string(count);
    first = false;
  }
  return out + "}";
}

/// Laplacian block spectra for one chain, with every closed form next to the
/// value computed from the matrices.
inline std::string render_spectrum(const ChainSpec& spec, OutputFormat format) {
  const int n = spec.n();
  const int d = end_degree_sum(spec).value;
  const BlockPair blocks = block_pair(spec);
  const LsSpectrum ls = ls_spectrum(spec);
  const CharPoly phi_la = char_poly(blocks.la);
  const std::vector<double> alpha = alpha_closed_form(n);
  const bool roots_ok = alpha_roots_match(n);

  const Rational sum_alpha = alpha_recip_sum_from_charpoly(n);
  const BigInt prod_alpha = alpha_product_from_charpoly(n);
  const Rational sum_zeta = recip_sum(ls.multiplicity);
  const Rational prod_zeta = product(ls.multiplicity);
  const Rational vertices(2 * n + 2);
  const Rational kf_spec = vertices * (sum_alpha + sum_zeta);
  const Rational tau_spec = Rational(prod_alpha) * prod_zeta / vertices;

  std::vector<std::string> ls_diag;
  for (const auto& v : blocks.ls.diagonal_entries()) ls_diag.push_back(to_string(v));

  if (format == OutputFormat::Json) {
    json a = json::array();
    for (double x : alpha) a.push_back(fixed(x, 12));
    json doc{{"spec", to_json(spec)},
             {"r", spec.r()},
             {"d", d},
             {"case", ls.case_tag},
             {"alpha", a},
             {"alpha_roots_match", roots_ok},
             {"char_poly_LA", phi_la.to_string()},
             {"ls_diagonal", ls_diag},
             {"zeta", to_json(ls.multiplicity)},
             {"sum_recip_alpha", {{"spectral", to_string(sum_alpha)}, {"closed", to_string(alpha_recip_sum(n))}}},
             {"prod_alpha", {{"spectral", prod_alpha.str()}, {"closed", alpha_product(n).str()}}},
             {"sum_recip_zeta",
              {{"spectral", to_string(sum_zeta)},
               {"closed", to_string(zeta_recip_sum(spec))},
               {"as_printed", to_string(zeta_recip_sum(spec, FormulaVariant::AsPrinted))}}},
             {"prod_zeta", {{"spectral", to_string(prod_zeta)}, {"closed", zeta_product(spec).str()}}},
             {"kf", {{"spectral", to_string(kf_spec)}, {"closed", to_string(kf_grn(n, spec.r(), d))}}},
             {"tau", {{"spectral", to_string(tau_spec)}, {"closed", tau_grn(n, spec.r(), d).str()}}}};
    if (spec.is_base_chain()) {
      doc["eta"] = to_json(eta_spectrum(n));
      doc["sum_recip_gamma"] = {{"vieta", to_string(gamma_recip_sum(n))},
                                {"closed", to_string(gamma_recip_sum_closed(n))}};
      doc["kfstar"] = {{"spectral", to_string(kfstar_from_spectrum(n))}, {"closed", to_string(kfstar_gn(n))}};
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "spectrum n=" << n << " deleted=[" << spec.deleted_string() << "] r=" << spec.r() << " d=" << d
      << " case=" << ls.case_tag << '\n';
  out << "alpha (8 sin^2 closed form):";
  for (double x : alpha) out << ' ' << fixed(x, 12);
  out << '\n';
  out << "alpha bracketed by roots of exact Phi(L_A) within 1e-9: " << (roots_ok ? "yes" : "NO") << '\n';
  out << "Phi(L_A) = " << phi_la.to_string() << '\n';
  out << "L_S diagonal (vertex order):";
  for (const auto& s : ls_diag) out << ' ' << s;
  out << '\n';
  out << "zeta multiset: " << multiset_text(ls.multiplicity) << '\n';
  out << "sum 1/alpha   spectral " << to_string(sum_alpha) << "   closed " << to_string(alpha_recip_sum(n)) << '\n';
  out << "prod alpha    spectral " << prod_alpha << "   closed " << alpha_product(n) << '\n';
  out << "sum 1/zeta    spectral " << to_string(sum_zeta) << "   closed " << to_string(zeta_recip_sum(spec))
      << "   as printed " << to_string(zeta_recip_sum(spec, FormulaVariant::AsPrinted)) << '\n';
  out << "prod zeta     spectral " << to_string(prod_zeta) << "   closed " << zeta_product(spec) << '\n';
  out << "Kf            spectral " << to_string(kf_spec) << "   closed " << to_string(kf_grn(n, spec.r(), d)) << '\n';
  out << "tau           spectral " << to_string(tau_spec) << "   closed " << tau_grn(n, spec.r(), d) << '\n';
  if (spec.is_base_chain()) {
    out << "eta multiset: " << multiset_text(eta_spectrum(n)) << '\n';
    out << "sum 1/gamma   vieta " << to_string(gamma_recip_sum(n)) << "   closed "
        << to_string(gamma_recip_sum_closed(n)) << '\n';
    out << "Kf*           spectral " << to_string(kfstar_from_spectrum(n)) << "   closed "
        << to_string(kfstar_gn(n)) << '\n';
  }
  return out.str();
}

/// Kf/W and Kf*/Gut with their distance from 1/4.
inline std::string render_ratios(const std::vector<int>& lengths, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::Json) {
    json rows = json::array();
    for (int n : lengths) {
      const RatioReport r = ratio_report(n);
      rows.push_back(json{{"n", n},
                          {"kf_over_w", to_string(r.kf_over_w)},
                          {"kf_over_w_value", fixed(r.kf_over_w_value(), 6)},
                          {"kfstar_over_gut", to_string(r.kfstar_over_gut)},
                          {"kfstar_over_gut_value", fixed(r.kfstar_over_gut_value(), 6)},
                          {"kf_deviation", fixed(to_double(r.kf_deviation()), 6)},
                          {"kfstar_deviation", fixed(to_double(r.kfstar_deviation()), 6)}});
    }
    out << rows.dump(2) << '\n';
    return out.str();
  }
  const char sep = format == OutputFormat::Csv ? ',' : '\t';
  out << (format == OutputFormat::Csv ? "" : "# ") << "n" << sep << "kf_over_w" << sep << "kfstar_over_gut" << sep
      << "kf_deviation" << sep << "kfstar_deviation" << sep << "kf_over_w_exact" << sep << "kfstar_over_gut_exact\n";
  for (int n : lengths) {
    const RatioReport r = ratio_report(n);
    out << n << sep << fixed(r.kf_over_w_value(), 6) << sep << fixed(r.kfstar_over_gut_value(), 6) << sep
        << fixed(to_double(r.kf_deviation()), 6) << sep << fixed(to_double(r.kfstar_deviation()), 6) << sep
        << to_string(r.kf_over_w) << sep << to_string(r.kfstar_over_gut) << '\n';
  }
  return out.str();
}

}  // namespace kchain::harness
