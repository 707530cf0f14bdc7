/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "eacqc/gf.hpp"
#include "eacqc/error.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace eacqc {

namespace {

using Poly = std::vector<std::uint32_t>;

// Conway polynomials, lowest coefficient first.
const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> &conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{7, 2}, {3, 6, 1}},
  };
  return table;
}

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly &b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = (lead * b[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0)
        n /= f;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::string poly_to_string(const Poly &poly) {
  std::ostringstream os;
  for (std::size_t i = 0; i < poly.size(); ++i)
    os << (i ? "," : "") << poly[i];
  return os.str();
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0)
      return false;
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1)
    return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1)
    return true;
  // Enumerate monic divisors of degree 1..deg/2 via base-p counters.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_mod(f, g, p).empty())
        return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p)
        g[i++] = 0;
      if (i == d)
        break;
    }
  }
  return true;
}

std::optional<Poly> builtin_modulus(std::uint32_t p, std::uint32_t m) {
  if (m == 1)
    return Poly{0, 1};
  const auto &table = conway_table();
  auto it = table.find({p, m});
  if (it == table.end())
    return std::nullopt;
  return it->second;
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t m, Poly modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m; ++i)
    q_ *= p;
  build_tables();
}

std::shared_ptr<const GaloisField>
GaloisField::make(std::uint32_t p, std::uint32_t m, std::optional<Poly> modulus) {
  if (!is_prime(p))
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1)
    throw Error(ErrorKind::InvalidParams, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > max_size)
      throw Error(ErrorKind::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^20");
  }
  if (!modulus) {
    modulus = builtin_modulus(p, m);
    if (!modulus)
      throw Error(ErrorKind::NoBuiltinModulus,
                  "no default modulus for GF(" + std::to_string(p) + "^" +
                      std::to_string(m) + ")");
  }
  Poly &f = *modulus;
  if (f.size() != m + 1 || f.back() != 1)
    throw Error(ErrorKind::NotIrreducible,
                "modulus must be monic of degree " + std::to_string(m));
  for (auto c : f)
    if (c >= p)
      throw Error(ErrorKind::NotIrreducible,
                  "modulus coefficient out of range: " + poly_to_string(f));
  if (!is_irreducible(f, p))
    throw Error(ErrorKind::NotIrreducible,
                poly_to_string(f) + " is reducible over GF(" + std::to_string(p) +
                    ")");

  static std::mutex mutex;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, Poly>,
                  std::shared_ptr<const GaloisField>>
      cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(p, m, f);
  if (auto it = cache.find(key); it != cache.end())
    return it->second;
  auto field = std::make_shared<const GaloisField>(p, m, f);
  cache.emplace(std::move(key), field);
  return field;
}

std::shared_ptr<const GaloisField> GaloisField::of_size(std::uint64_t q) {
  if (q < 2)
    throw Error(ErrorKind::NotPrime, "field size must be a prime power");
  std::uint64_t p = 0;
  for (std::uint64_t f = 2; f <= q; ++f)
    if (q % f == 0) {
      p = f;
      break;
    }
  std::uint32_t m = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1)
    throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  if (q > max_size)
    throw Error(ErrorKind::FieldTooLarge, std::to_string(q) + " exceeds 2^20");
  return make(static_cast<std::uint32_t>(p), m);
}

std::vector<std::uint32_t> GaloisField::to_coefficients(std::uint32_t value) const {
  std::vector<std::uint32_t> out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = value % p_;
    value /= p_;
  }
  return out;
}

std::uint32_t
GaloisField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m_)
    throw Error(ErrorKind::DimensionMismatch, "coefficient vector length");
  std::uint32_t value = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_)
      throw Error(ErrorKind::InvalidParams, "coefficient out of range");
    value = value * p_ + coeffs[i];
  }
  return value;
}

std::uint32_t GaloisField::add_digits(std::uint32_t a, std::uint32_t b,
                                      bool subtract) const {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    const std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    const std::uint32_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    out += d * scale;
    scale *= p_;
  }
  return out;
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2)
    return a ^ b;
  if (m_ == 1)
    return (a + b) % p_;
  if (!add_table_.empty())
    return add_table_[a * q_ + b];
  return add_digits(a, b, false);
}

std::uint32_t GaloisField::neg(std::uint32_t a) const {
  if (p_ == 2 || a == 0)
    return a;
  if (m_ == 1)
    return p_ - a;
  return add_digits(0, a, true);
}

std::uint32_t GaloisField::sub(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2)
    return a ^ b;
  if (m_ == 1)
    return (a + p_ - b) % p_;
  return add(a, neg(b));
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0)
    throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

std::uint32_t GaloisField::div(std::uint32_t a, std::uint32_t b) const {
  return mul(a, inv(b));
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0)
    return 1;
  if (a == 0)
    return 0;
  const std::uint64_t order = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

std::uint32_t GaloisField::frobenius(std::uint32_t a, std::uint32_t base) const {
  if (static_cast<std::uint64_t>(base) * base != q_)
    throw Error(ErrorKind::FieldMismatch,
                "field of size " + std::to_string(q_) + " is not GF(" +
                    std::to_string(base) + "^2)");
  return pow(a, base);
}

std::uint32_t GaloisField::slow_mul(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1)
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  const auto ca = to_coefficients(a), cb = to_coefficients(b);
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(m_, 0);
  return from_coefficients(r);
}

void GaloisField::build_tables() {
  const std::uint32_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1)
        r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  auto is_generator = [&](std::uint32_t g) {
    if (g == 0)
      return false;
    for (auto f : factors)
      if (slow_pow(g, order / f) == 1)
        return false;
    return true;
  };

  // x (encoded as p) is primitive for every Conway modulus; try it first.
  if (q_ == 2)
    generator_ = 1;
  else if (m_ > 1 && is_generator(p_))
    generator_ = p_;
  else
    for (std::uint32_t g = 2; g < q_; ++g)
      if (is_generator(g)) {
        generator_ = g;
        break;
      }

  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  log_.assign(q_, 0);
  if (m_ > 1 && generator_ == p_) {
    // Multiplication by x on coefficient vectors: shift and reduce.
    Poly cur(m_, 0);
    cur[0] = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
      const std::uint32_t v = from_coefficients(cur);
      exp_[i] = v;
      log_[v] = i;
      const std::uint32_t lead = cur[m_ - 1];
      for (std::uint32_t j = m_ - 1; j > 0; --j)
        cur[j] = cur[j - 1];
      cur[0] = 0;
      for (std::uint32_t j = 0; j < m_; ++j)
        cur[j] = static_cast<std::uint32_t>(
            (cur[j] + p_ - (std::uint64_t{lead} * modulus_[j]) % p_) % p_);
    }
  } else {
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
      exp_[i] = v;
      log_[v] = i;
      v = slow_mul(v, generator_);
    }
  }
  for (std::uint32_t i = 0; i < order; ++i)
    exp_[order + i] = exp_[i];

  if (p_ != 2 && m_ > 1 && q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b)
        add_table_[a * q_ + b] = add_digits(a, b, false);
  }
}

bool same_field(const Field &a, const Field &b) {
  return a && b && a->same_as(*b);
}

void require_same_field(const Field &a, const Field &b, const char *what) {
  if (!same_field(a, b))
    throw Error(ErrorKind::FieldMismatch, what);
}

FieldElement::FieldElement(Field field, std::uint32_t value)
    : field_(std::move(field)), value_(value) {
  if (!field_ || value_ >= field_->size())
    throw Error(ErrorKind::InvalidParams,
                "element " + std::to_string(value) + " outside the field");
}

FieldElement FieldElement::operator+(const FieldElement &o) const {
  require_same_field(field_, o.field_, "addition across fields");
  return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement &o) const {
  require_same_field(field_, o.field_, "subtraction across fields");
  return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement &o) const {
  require_same_field(field_, o.field_, "multiplication across fields");
  return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement &o) const {
  require_same_field(field_, o.field_, "division across fields");
  return {field_, field_->div(value_, o.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const {
  return {field_, field_->pow(value_, e)};
}

FieldElement FieldElement::frobenius(std::uint32_t base) const {
  return {field_, field_->frobenius(value_, base)};
}

} // namespace eacqc
