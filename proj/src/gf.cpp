#include "subcodes/gf.hpp"

#include <algorithm>
#include <string>

#include "subcodes/error.hpp"

namespace subcodes {

namespace detail {

struct FieldData {
  std::uint32_t q = 2;
  int n = 1;
  std::vector<std::uint32_t> modulus;
  std::uint64_t order = 2;
  // place[i] = q^{n-1-i}, the weight of coefficient i inside an index.
  std::vector<std::uint64_t> place;
  FieldElement primitive;
  // exp/log tables over the primitive element; empty for large fields.
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;
};

}  // namespace detail

namespace {

constexpr int kMaxDegree = 24;
constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 20;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_q.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t q) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + q - (lead * m[i]) % q) % q);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t p = 2; p * p <= v; ++p)
    if (v % p == 0) return false;
  return true;
}

bool Field::is_irreducible(std::uint32_t q, std::span<const std::uint32_t> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Odometer over the d lower coefficients of a monic divisor of degree d.
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_mod(f, g, q).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == q) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

Field Field::create(std::uint32_t q, int n, std::optional<std::vector<std::uint32_t>> modulus) {
  require(is_prime(q), ErrorCode::NonPrimeCharacteristic, std::to_string(q) + " is not prime");
  require(n >= 1, ErrorCode::InvalidParams, "extension degree must be at least 1");
  require(n <= kMaxDegree, ErrorCode::ParameterOutOfRange, "extension degree above 24");

  auto data = std::make_shared<detail::FieldData>();
  data->q = q;
  data->n = n;
  data->place.assign(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) data->place[i] = data->place[i + 1] * q;
  data->order = data->place[0] * q;

  if (modulus) {
    const auto& m = *modulus;
    require(m.size() == static_cast<std::size_t>(n) + 1 && m.back() == 1, ErrorCode::InvalidModulus,
            "modulus must be monic of degree " + std::to_string(n));
    for (auto c : m) require(c < q, ErrorCode::InvalidModulus, "modulus coefficient out of range");
    require(is_irreducible(q, m), ErrorCode::ReducibleModulus, "modulus is reducible");
    data->modulus = m;
  } else {
    // Candidates in lexicographic order with the constant term most significant:
    // the same digit layout as element indices.
    for (std::uint64_t idx = 0; idx < data->order; ++idx) {
      Poly cand(static_cast<std::size_t>(n) + 1, 1);
      for (int i = 0; i < n; ++i) cand[i] = static_cast<std::uint32_t>((idx / data->place[i]) % q);
      if (is_irreducible(q, cand)) {
        data->modulus = std::move(cand);
        break;
      }
    }
    require(!data->modulus.empty(), ErrorCode::InternalConsistency, "no irreducible polynomial found");
  }

  Field field(data);
  // Primitive element: first x whose order is exactly q^n - 1.
  const std::uint64_t group = data->order - 1;
  const auto factors = prime_factors(group);
  for (std::uint64_t idx = 1; idx < data->order; ++idx) {
    FieldElement x{idx};
    bool ok = true;
    for (auto p : factors) {
      // square-and-multiply with the slow product; tables are not built yet
      FieldElement acc = field.one(), base = x;
      for (std::uint64_t e = group / p; e != 0; e >>= 1) {
        if (e & 1U) acc = field.mul_slow(acc, base);
        base = field.mul_slow(base, base);
      }
      if (acc == field.one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      data->primitive = x;
      break;
    }
  }

  if (data->order <= kMaxTableOrder) {
    data->exp.resize(group);
    data->log.assign(data->order, 0);
    FieldElement acc = field.one();
    for (std::uint64_t i = 0; i < group; ++i) {
      data->exp[i] = static_cast<std::uint32_t>(acc.index);
      data->log[acc.index] = static_cast<std::uint32_t>(i);
      acc = field.mul_slow(acc, data->primitive);
    }
  }
  return field;
}

std::uint32_t Field::q() const { return data_->q; }
int Field::degree() const { return data_->n; }
const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }
std::uint64_t Field::order() const { return data_->order; }
FieldElement Field::one() const { return {data_->place[0]}; }
FieldElement Field::primitive() const { return data_->primitive; }

FieldElement Field::scalar(std::uint32_t c) const { return {(c % data_->q) * data_->place[0]}; }

FieldElement Field::basis(int i) const {
  require(i >= 0 && i < data_->n, ErrorCode::ParameterOutOfRange, "basis index out of range");
  return {data_->place[i]};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  require(coeffs.size() == static_cast<std::size_t>(data_->n), ErrorCode::LengthMismatch,
          "element needs exactly n coefficients");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    require(coeffs[i] < data_->q, ErrorCode::ParameterOutOfRange, "coefficient not reduced mod q");
    idx += coeffs[i] * data_->place[i];
  }
  return {idx};
}

FieldElement Field::from_index(std::uint64_t index) const {
  require(index < data_->order, ErrorCode::ParameterOutOfRange, "element index out of range");
  return {index};
}

std::uint32_t Field::coeff(FieldElement a, int i) const {
  return static_cast<std::uint32_t>((a.index / data_->place[i]) % data_->q);
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(data_->n));
  for (int i = 0; i < data_->n; ++i) out[i] = coeff(a, i);
  return out;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out(data_->order);
  for (std::uint64_t i = 0; i < data_->order; ++i) out[i] = {i};
  return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  const std::uint32_t q = data_->q;
  if (q == 2) return {a.index ^ b.index};
  std::uint64_t r = 0, w = 1, x = a.index, y = b.index;
  for (int i = 0; i < data_->n; ++i) {
    r += ((x % q + y % q) % q) * w;
    x /= q;
    y /= q;
    w *= q;
  }
  return {r};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
  const std::uint32_t q = data_->q;
  if (q == 2) return {a.index ^ b.index};
  std::uint64_t r = 0, w = 1, x = a.index, y = b.index;
  for (int i = 0; i < data_->n; ++i) {
    r += ((x % q + q - y % q) % q) * w;
    x /= q;
    y /= q;
    w *= q;
  }
  return {r};
}

FieldElement Field::neg(FieldElement a) const { return sub(zero(), a); }

FieldElement Field::mul_slow(FieldElement a, FieldElement b) const {
  const auto n = static_cast<std::size_t>(data_->n);
  const std::uint64_t q = data_->q;
  auto ca = coeffs(a), cb = coeffs(b);
  Poly prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + ca[i] * std::uint64_t{cb[j]}) % q);
    }
  }
  auto rem = poly_mod(std::move(prod), data_->modulus, data_->q);
  rem.resize(n, 0);
  return from_coeffs(rem);
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  if (data_->exp.empty()) return mul_slow(a, b);
  const std::uint64_t group = data_->order - 1;
  return {data_->exp[(std::uint64_t{data_->log[a.index]} + data_->log[b.index]) % group]};
}

FieldElement Field::inv(FieldElement a) const {
  require(!a.is_zero(), ErrorCode::ZeroInverse, "zero has no inverse");
  const std::uint64_t group = data_->order - 1;
  if (!data_->exp.empty()) return {data_->exp[(group - data_->log[a.index]) % group]};
  return pow(a, static_cast<std::int64_t>(group - 1));
}

FieldElement Field::pow(FieldElement a, std::int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  const std::uint64_t group = data_->order - 1;
  const std::uint64_t ex = static_cast<std::uint64_t>(e) % group;
  if (!data_->exp.empty()) return {data_->exp[(data_->log[a.index] * ex) % group]};
  FieldElement acc = one(), base = a;
  for (std::uint64_t k = ex; k != 0; k >>= 1) {
    if (k & 1U) acc = mul_slow(acc, base);
    base = mul_slow(base, base);
  }
  return acc;
}

FieldElement Field::frobenius(FieldElement x, int i) const {
  require(i >= 0, ErrorCode::ParameterOutOfRange, "frobenius power must be nonnegative");
  FieldElement r = x;
  for (int k = 0; k < i % data_->n; ++k) r = pow(r, data_->q);
  return r;
}

std::uint32_t Field::trace(FieldElement x) const {
  FieldElement sum = zero(), conj = x;
  for (int i = 0; i < data_->n; ++i) {
    sum = add(sum, conj);
    conj = pow(conj, data_->q);
  }
  for (int i = 1; i < data_->n; ++i) {
    require(coeff(sum, i) == 0, ErrorCode::InternalConsistency, "trace left the base field");
  }
  return coeff(sum, 0);
}

bool Field::subfield_member(FieldElement x, int k) const {
  require(k >= 1 && data_->n % k == 0, ErrorCode::NonDivisorDegree,
          std::to_string(k) + " does not divide " + std::to_string(data_->n));
  return frobenius(x, k) == x;
}

FqMatrix Field::multiplication_matrix(FieldElement x) const {
  const auto n = static_cast<std::size_t>(data_->n);
  FqMatrix m(data_->q, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto prod = mul(x, basis(static_cast<int>(i)));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = coeff(prod, static_cast<int>(j));
  }
  return m;
}

bool operator==(const Field& a, const Field& b) {
  return a.data_ == b.data_ ||
         (a.data_->q == b.data_->q && a.data_->n == b.data_->n && a.data_->modulus == b.data_->modulus);
}

LinearEmbedding::LinearEmbedding(Field src, Field dst) : src_(std::move(src)), dst_(std::move(dst)) {
  require(src_.q() == dst_.q(), ErrorCode::FieldMismatch, "embedding needs a common base field");
  require(dst_.degree() >= src_.degree(), ErrorCode::DimensionTooSmall,
          "target field is smaller than the source");
}

FieldElement LinearEmbedding::operator()(FieldElement x) const {
  auto c = src_.coeffs(x);
  c.resize(static_cast<std::size_t>(dst_.degree()), 0);
  return dst_.from_coeffs(c);
}

FqMatrix LinearEmbedding::matrix() const {
  const auto k = static_cast<std::size_t>(src_.degree());
  const auto m = static_cast<std::size_t>(dst_.degree());
  FqMatrix out(src_.q(), k, m);
  for (std::size_t i = 0; i < k; ++i) out(i, i) = 1;
  return out;
}

LinearEmbedding embed_linear(const Field& src, const Field& dst) { return LinearEmbedding(src, dst); }

}  // namespace subcodes
