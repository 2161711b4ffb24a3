#pragma once

#include <string>

#include <json.hpp>

#include "starhess/bidiag.hpp"
#include "starhess/mop.hpp"
#include "starhess/multipoly.hpp"
#include "starhess/posspec.hpp"
#include "starhess/prodmat.hpp"
#include "starhess/rational.hpp"
#include "starhess/unipoly.hpp"

namespace starhess {

// Rational <-> "p/q" (or "p" when the denominator is one).
inline void to_json(nlohmann::json& dst, const Rational& r) { dst = r.str(); }
inline void from_json(const nlohmann::json& src, Rational& r) {
  r = Rational::parse(src.get<std::string>());
}

// MultiPoly <-> {"terms":[{"exps":[[i,e],...],"coef":"<int>"}]}, exps sorted
// by index, terms in canonical order.
inline void to_json(nlohmann::json& dst, const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (const auto& [i, k] : e) exps.push_back({i, k});
    terms.push_back({{"exps", std::move(exps)}, {"coef", c.get_str()}});
  }
  dst = {{"terms", std::move(terms)}};
}

inline void from_json(const nlohmann::json& src, MultiPoly& p) {
  p = MultiPoly::zero();
  for (const auto& term : src.at("terms")) {
    MultiPoly::Exponents e;
    for (const auto& pair : term.at("exps"))
      e.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    p += MultiPoly::from_term(std::move(e), mpz_class(term.at("coef").get<std::string>()));
  }
}

// UniPoly <-> {"coeffs":[...]} indexed by degree.
template <class R>
void to_json(nlohmann::json& dst, const UniPoly<R>& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const R& c : p.coeffs()) coeffs.push_back(c);
  dst = {{"coeffs", std::move(coeffs)}};
}

template <class R>
void from_json(const nlohmann::json& src, UniPoly<R>& p) {
  std::vector<R> coeffs;
  for (const auto& c : src.at("coeffs")) coeffs.push_back(c.get<R>());
  p = UniPoly<R>(std::move(coeffs));
}

// BandedHessenberg <-> {"r","j","size","bands":{"-1":[...], "0":[...], ...}}.
template <class R>
void to_json(nlohmann::json& dst, const bidiag::BandedHessenberg<R>& h) {
  nlohmann::json bands = nlohmann::json::object();
  for (const auto& [d, band] : h.bands()) {
    nlohmann::json entries = nlohmann::json::array();
    for (const R& v : band) entries.push_back(v);
    bands[std::to_string(d)] = std::move(entries);
  }
  dst = {{"r", h.r()}, {"j", h.j()}, {"size", h.size()}, {"bands", std::move(bands)}};
}

template <class R>
void from_json(const nlohmann::json& src, bidiag::BandedHessenberg<R>& h) {
  h = bidiag::BandedHessenberg<R>(src.at("r").get<int>(), src.at("j").get<int>(),
                                  src.at("size").get<int>());
  for (int d = -1; d <= h.r(); ++d) {
    const auto& band = src.at("bands").at(std::to_string(d));
    if (static_cast<int>(band.size()) != h.band_length(d))
      throw UsageError("band length does not match the matrix size");
    int lo = d < 0 ? -d : 0;
    for (int i = 0; i < static_cast<int>(band.size()); ++i) {
      R v = band[i].template get<R>();
      if (d == -1 && v != R::one()) throw UsageError("supradiagonal must be the ring one");
      if (d >= 0) h.band_entry(d, i + lo) = std::move(v);
    }
  }
}

// Square matrix dump {"size":M,"rows":[[...]]}; triangular matrices are
// padded with zeros above the diagonal.
template <class R>
void to_json(nlohmann::json& dst, const prodmat::OutputMatrix<R>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const R& v : row) r.push_back(v);
    rows.push_back(std::move(r));
  }
  dst = {{"size", m.size}, {"rows", std::move(rows)}};
}

template <class R>
void from_json(const nlohmann::json& src, prodmat::OutputMatrix<R>& m) {
  m.size = src.at("size").get<int>();
  m.rows.clear();
  for (const auto& row : src.at("rows")) {
    std::vector<R> r;
    for (const auto& v : row) r.push_back(v.template get<R>());
    m.rows.push_back(std::move(r));
  }
}

template <class R>
void to_json(nlohmann::json& dst, const prodmat::TriangularMatrix<R>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 0; n < m.size; ++n) {
    nlohmann::json r = nlohmann::json::array();
    for (int k = 0; k < m.size; ++k) r.push_back(m.entry(n, k));
    rows.push_back(std::move(r));
  }
  dst = {{"size", m.size}, {"rows", std::move(rows)}};
}

template <class R>
void from_json(const nlohmann::json& src, prodmat::TriangularMatrix<R>& m) {
  m.size = src.at("size").get<int>();
  m.rows.clear();
  const auto& rows = src.at("rows");
  for (int n = 0; n < m.size; ++n) {
    std::vector<R> r;
    for (int k = 0; k <= n; ++k) r.push_back(rows.at(n).at(k).template get<R>());
    for (int k = n + 1; k < m.size; ++k)
      if (!rows.at(n).at(k).template get<R>().is_zero())
        throw UsageError("nonzero entry above the diagonal");
    m.rows.push_back(std::move(r));
  }
}

namespace mop {

inline void to_json(nlohmann::json& dst, const OrthoEntry& e) {
  dst = {{"functional", e.functional},
         {"k", e.k},
         {"n", e.n},
         {"expected", e.expect_nonzero ? "nonzero" : "zero"},
         {"value", e.value},
         {"pass", e.pass}};
}

inline void to_json(nlohmann::json& dst, const OrthogonalityReport& r) {
  dst = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json je = e;
    dst.push_back(std::move(je));
  }
}

}  // namespace mop

namespace posspec {

inline void to_json(nlohmann::json& dst, const RootBox& b) {
  dst = {{"lo", b.lo.str()}, {"hi", b.hi.str()}};
}

inline void from_json(const nlohmann::json& src, RootBox& b) {
  b.lo = Rational::parse(src.at("lo").get<std::string>());
  b.hi = Rational::parse(src.at("hi").get<std::string>());
}

inline void to_json(nlohmann::json& dst, const StarZero& z) {
  dst = {{"ray", z.ray},
         {"lo", z.radius.lo.str()},
         {"hi", z.radius.hi.str()},
         {"origin_multiplicity", z.origin_multiplicity}};
}

inline void from_json(const nlohmann::json& src, StarZero& z) {
  z.ray = src.at("ray").get<int>();
  z.radius.lo = Rational::parse(src.at("lo").get<std::string>());
  z.radius.hi = Rational::parse(src.at("hi").get<std::string>());
  z.origin_multiplicity = src.at("origin_multiplicity").get<int>();
}

}  // namespace posspec

}  // namespace starhess
