#include "seqinfer/laws.hpp"

#include <cstddef>
#include <stdexcept>

namespace seqinfer {

NoLawFoundError::NoLawFoundError(int slot)
    : std::runtime_error(slot >= 0
                             ? "no law fits slot " + std::to_string(slot)
                             : std::string("no law fits the value sequence")),
      slot(slot) {}

namespace {

// Minimal period p with 2 <= p <= n-1 and v[i] == v[i+p] wherever both
// indices exist (so at least p+1 samples confirm the cycle).
template <typename T>
std::optional<size_t> minimal_period(const std::vector<T>& v) {
  const size_t n = v.size();
  for (size_t p = 2; p + 1 <= n; ++p) {
    bool ok = true;
    for (size_t i = 0; i + p < n; ++i) {
      if (!(v[i] == v[i + p])) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  }
  return std::nullopt;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& m) {
  Rational acc(0);
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * m + coeffs[i];
  return acc;
}

// Newton forward-difference interpolation through (m, v[m]) for m = 0..d,
// converted to monomial coefficients.
std::vector<Rational> fit_polynomial(const std::vector<Rational>& v, size_t d) {
  // forward differences at 0
  std::vector<Rational> level(v.begin(), v.begin() + static_cast<long>(d) + 1);
  std::vector<Rational> delta0(d + 1);
  delta0[0] = level[0];
  for (size_t j = 1; j <= d; ++j) {
    for (size_t i = 0; i + 1 < level.size(); ++i) level[i] = level[i + 1] - level[i];
    level.pop_back();
    delta0[j] = level[0];
  }
  // accumulate delta0[j]/j! * m(m-1)...(m-j+1) in monomial form
  std::vector<Rational> coeffs(d + 1, Rational(0));
  std::vector<Rational> basis{Rational(1)};  // falling factorial, degree j
  Rational fact(1);
  for (size_t j = 0; j <= d; ++j) {
    if (j > 0) fact *= Rational(static_cast<long long>(j));
    Rational scale = delta0[j] / fact;
    for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += scale * basis[i];
    // basis *= (m - j)
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= Rational(static_cast<long long>(j)) * basis[i];
    }
    basis = std::move(next);
  }
  return coeffs;
}

}  // namespace

std::optional<SlotLaw> try_detect(const std::vector<Rational>& v) {
  const size_t k = v.size();
  if (k < 3) throw std::invalid_argument("law detection needs at least 3 values");

  bool constant = true;
  for (size_t i = 1; i < k; ++i)
    if (v[i] != v[0]) {
      constant = false;
      break;
    }
  if (constant) return SlotLaw(ConstantLaw{SlotValue(v[0])});

  {
    Rational d = v[1] - v[0];
    bool ok = true;
    for (size_t i = 1; i + 1 < k; ++i)
      if (v[i + 1] - v[i] != d) {
        ok = false;
        break;
      }
    if (ok) return SlotLaw(ArithmeticLaw{v[0], d});
  }

  bool all_nonzero = true;
  for (const Rational& x : v)
    if (x.is_zero()) {
      all_nonzero = false;
      break;
    }

  if (all_nonzero) {
    Rational r = v[1] / v[0];
    bool ok = true;
    for (size_t i = 1; i + 1 < k; ++i)
      if (v[i + 1] / v[i] != r) {
        ok = false;
        break;
      }
    if (ok) return SlotLaw(GeometricLaw{v[0], r});
  }

  if (auto p = minimal_period(v)) {
    std::vector<SlotValue> cyc(v.begin(), v.begin() + static_cast<long>(*p));
    return SlotLaw(CycleLaw{std::move(cyc)});
  }

  if (all_nonzero && k >= 4) {
    std::vector<Rational> ratios;
    ratios.reserve(k - 1);
    for (size_t i = 0; i + 1 < k; ++i) ratios.push_back(v[i + 1] / v[i]);
    Rational rd = ratios[1] - ratios[0];
    bool ok = true;
    for (size_t i = 1; i + 1 < ratios.size(); ++i)
      if (ratios[i + 1] - ratios[i] != rd) {
        ok = false;
        break;
      }
    if (ok) return SlotLaw(ProductRecurrenceLaw{v[0], ratios[0], rd});
  }

  for (size_t d = 2; d + 2 <= k; ++d) {
    std::vector<Rational> coeffs = fit_polynomial(v, d);
    bool ok = true;
    for (size_t m = 0; m < k; ++m)
      if (eval_poly(coeffs, Rational(static_cast<long long>(m))) != v[m]) {
        ok = false;
        break;
      }
    if (ok) return SlotLaw(PolynomialLaw{std::move(coeffs)});
  }

  return std::nullopt;
}

std::optional<SlotLaw> try_detect(const std::vector<SignedFunc>& v) {
  const size_t k = v.size();
  if (k < 3) throw std::invalid_argument("law detection needs at least 3 values");

  bool constant = true;
  for (size_t i = 1; i < k; ++i)
    if (!(v[i] == v[0])) {
      constant = false;
      break;
    }
  if (constant) return SlotLaw(ConstantLaw{SlotValue(v[0])});

  if (auto p = minimal_period(v)) {
    std::vector<SlotValue> cyc(v.begin(), v.begin() + static_cast<long>(*p));
    return SlotLaw(CycleLaw{std::move(cyc)});
  }

  return std::nullopt;
}

SlotLaw detect_law(const std::vector<Rational>& values) {
  if (auto law = try_detect(values)) return *law;
  throw NoLawFoundError(-1);
}

SlotLaw detect_law(const std::vector<SignedFunc>& values) {
  if (auto law = try_detect(values)) return *law;
  throw NoLawFoundError(-1);
}

SlotValue law_value_at(const SlotLaw& law, long long m) {
  if (m < 0) throw std::invalid_argument("law_value_at: negative offset");
  if (const auto* c = std::get_if<ConstantLaw>(&law)) return c->value;
  if (const auto* a = std::get_if<ArithmeticLaw>(&law))
    return SlotValue(a->first + a->difference * Rational(m));
  if (const auto* g = std::get_if<GeometricLaw>(&law))
    return SlotValue(g->first * g->ratio.pow(m));
  if (const auto* cy = std::get_if<CycleLaw>(&law))
    return cy->values[static_cast<size_t>(m % static_cast<long long>(cy->values.size()))];
  if (const auto* pr = std::get_if<ProductRecurrenceLaw>(&law)) {
    Rational acc = pr->first;
    for (long long i = 0; i < m; ++i)
      acc *= pr->ratio_first + pr->ratio_difference * Rational(i);
    return SlotValue(acc);
  }
  const auto& poly = std::get<PolynomialLaw>(law);
  return SlotValue(eval_poly(poly.coefficients, Rational(m)));
}

std::string slot_value_text(const SlotValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->str();
  const auto& f = std::get<SignedFunc>(v);
  return (f.sign < 0 ? "-" : "") + std::string(func_name(f.symbol));
}

std::string law_text(const SlotLaw& law) {
  if (const auto* c = std::get_if<ConstantLaw>(&law))
    return "constant(" + slot_value_text(c->value) + ")";
  if (const auto* a = std::get_if<ArithmeticLaw>(&law))
    return "arithmetic(first=" + a->first.str() + ", difference=" + a->difference.str() + ")";
  if (const auto* g = std::get_if<GeometricLaw>(&law))
    return "geometric(first=" + g->first.str() + ", ratio=" + g->ratio.str() + ")";
  if (const auto* cy = std::get_if<CycleLaw>(&law)) {
    std::string s = "cycle(period=" + std::to_string(cy->values.size()) + ", values=[";
    for (size_t i = 0; i < cy->values.size(); ++i) {
      if (i) s += ", ";
      s += slot_value_text(cy->values[i]);
    }
    return s + "])";
  }
  if (const auto* pr = std::get_if<ProductRecurrenceLaw>(&law))
    return "product-recurrence(first=" + pr->first.str() +
           ", ratio_first=" + pr->ratio_first.str() +
           ", ratio_difference=" + pr->ratio_difference.str() + ")";
  const auto& poly = std::get<PolynomialLaw>(law);
  std::string s = "polynomial(coefficients=[";
  for (size_t i = 0; i < poly.coefficients.size(); ++i) {
    if (i) s += ", ";
    s += poly.coefficients[i].str();
  }
  return s + "])";
}

}  // namespace seqinfer
