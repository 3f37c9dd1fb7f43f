#include "qcalc/laurent_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "qcalc/error.hpp"

namespace qcalc {

namespace {

using Dense = std::vector<GaussianRational>;

void trim_back(Dense& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// Remainder of a / b for ordinary polynomials (index = degree); b nonzero.
Dense poly_rem(Dense a, const Dense& b) {
  trim_back(a);
  GaussianRational lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    GaussianRational factor = a.back() * lead_inv;
    std::size_t offset = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[offset + k] -= factor * b[k];
    a.pop_back();
    trim_back(a);
  }
  return a;
}

void make_monic(Dense& v) {
  GaussianRational inv = v.back().inverse();
  for (auto& c : v) c *= inv;
}

// Arithmetic modulo a prime p = 1 (mod 4), where -1 has a square root, so that
// Gaussian rationals with denominators prime to p map into Z/p.
constexpr std::uint64_t kPrime = 1000000009ULL;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1U) r = mul_mod(r, b);
    b = mul_mod(b, b);
    e >>= 1U;
  }
  return r;
}

std::uint64_t sqrt_minus_one() {
  static const std::uint64_t root = [] {
    for (std::uint64_t g = 2;; ++g) {
      std::uint64_t c = pow_mod(g, (kPrime - 1) / 4);
      if (mul_mod(c, c) == kPrime - 1) return c;
    }
  }();
  return root;
}

std::optional<std::uint64_t> rational_mod(const mpq_class& v) {
  mpz_class d = v.get_den() % kPrime;
  if (d == 0) return std::nullopt;
  mpz_class n = v.get_num() % kPrime;
  if (n < 0) n += kPrime;
  return mul_mod(n.get_ui(), pow_mod(d.get_ui(), kPrime - 2));
}

std::optional<std::vector<std::uint64_t>> reduce_mod(const Dense& v) {
  std::vector<std::uint64_t> out;
  out.reserve(v.size());
  for (const auto& c : v) {
    auto re = rational_mod(c.re());
    auto im = rational_mod(c.im());
    if (!re || !im) return std::nullopt;
    out.push_back((*re + mul_mod(*im, sqrt_minus_one())) % kPrime);
  }
  if (out.empty() || out.back() == 0) return std::nullopt;
  return out;
}

// True only when the polynomials are certainly coprime over Q(i): their images
// mod p keep full degree and have a constant gcd there.
bool certainly_coprime(const Dense& a, const Dense& b) {
  auto x = reduce_mod(a);
  auto y = reduce_mod(b);
  if (!x || !y) return false;
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  while (!y->empty()) {
    std::uint64_t inv = pow_mod(y->back(), kPrime - 2);
    while (x->size() >= y->size()) {
      std::uint64_t f = mul_mod(x->back(), inv);
      std::size_t off = x->size() - y->size();
      for (std::size_t k = 0; k < y->size(); ++k) {
        (*x)[off + k] = ((*x)[off + k] + kPrime - mul_mod(f, (*y)[k])) % kPrime;
      }
      x->pop_back();
      trim(*x);
    }
    std::swap(*x, *y);
  }
  return x->size() == 1;
}

}  // namespace

LaurentPoly::LaurentPoly(GaussianRational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::monomial(GaussianRational c, int s_exponent) {
  LaurentPoly p(std::move(c));
  if (!p.is_zero()) p.low_ = s_exponent;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, GaussianRational>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

bool LaurentPoly::has_odd_exponent() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero() && ((low_ + static_cast<int>(k)) % 2 != 0)) return true;
  }
  return false;
}

GaussianRational LaurentPoly::coeff(int e) const {
  if (is_zero() || e < low_ || e > high()) return {};
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::vector<std::pair<int, GaussianRational>> LaurentPoly::terms() const {
  std::vector<std::pair<int, GaussianRational>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  }
  return out;
}

void LaurentPoly::trim() {
  trim_back(coeffs_);
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return !c.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), GaussianRational());
  low_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    coeffs_[static_cast<std::size_t>(o.low_ - lo) + k] += o.coeffs_[k];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, GaussianRational());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) return *this = LaurentPoly();
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += e;
  return r;
}

LaurentPoly LaurentPoly::invert_s() const {
  if (is_zero()) return {};
  LaurentPoly r;
  r.low_ = -high();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

LaurentPoly LaurentPoly::stretch(int k) const {
  if (k == 0) throw QError(ErrorKind::InvalidArgument, "stretch factor must be nonzero");
  LaurentPoly r;
  for (const auto& [e, c] : terms()) r += monomial(c, e * k);
  return r;
}

GaussianRational LaurentPoly::eval(const GaussianRational& s) const {
  if (is_zero()) return {};
  // Horner on the dense part, then multiply by s^low.
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  if (low_ == 0) return acc;
  if (s.is_zero()) {
    if (low_ > 0) return {};
    throw QError(ErrorKind::Pole, "negative power of s evaluated at s = 0");
  }
  GaussianRational shift = low_ > 0 ? pow(s, static_cast<unsigned>(low_)) : pow(s.inverse(), static_cast<unsigned>(-low_));
  return acc * shift;
}

std::complex<double> LaurentPoly::eval(std::complex<double> s) const {
  if (is_zero()) return {};
  std::complex<double> acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + it->to_complex();
  return low_ == 0 ? acc : acc * std::pow(s, low_);
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw QError(ErrorKind::DivisionByZero, "division by zero Laurent polynomial");
  if (is_zero()) return LaurentPoly();
  if (d.is_monomial()) {
    LaurentPoly r = *this * d.coeffs_[0].inverse();
    return r.shifted(-d.low_);
  }
  // Long division of the dense parts from the top; the s-power offsets simply subtract.
  Dense rem = coeffs_;
  const Dense& div = d.coeffs_;
  if (rem.size() < div.size()) return std::nullopt;
  Dense quot(rem.size() - div.size() + 1);
  GaussianRational lead_inv = div.back().inverse();
  for (std::size_t step = quot.size(); step-- > 0;) {
    GaussianRational factor = rem[step + div.size() - 1] * lead_inv;
    if (factor.is_zero()) continue;
    quot[step] = factor;
    for (std::size_t k = 0; k < div.size(); ++k) rem[step + k] -= factor * div[k];
  }
  for (const auto& c : rem) {
    if (!c.is_zero()) return std::nullopt;
  }
  LaurentPoly q;
  q.low_ = low_ - d.low_;
  q.coeffs_ = std::move(quot);
  q.trim();
  return q;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c;
    } else {
      if (!c.is_one()) os << c << "*";
      os << "s^" << e;
    }
  }
  return os.str();
}

LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
  LaurentPoly result(1);
  LaurentPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto dense = [](const LaurentPoly& p) {
    Dense v;
    if (p.is_zero()) return v;
    for (int e = p.low(); e <= p.high(); ++e) v.push_back(p.coeff(e));
    return v;
  };
  Dense x = dense(a);
  Dense y = dense(b);
  if (!x.empty() && !y.empty() && certainly_coprime(x, y)) return LaurentPoly(1);
  if (!y.empty()) make_monic(y);
  while (!y.empty()) {
    Dense r = poly_rem(x, y);
    if (!r.empty()) make_monic(r);
    x = std::move(y);
    y = std::move(r);
  }
  make_monic(x);
  LaurentPoly g;
  for (std::size_t k = 0; k < x.size(); ++k) g += LaurentPoly::monomial(x[k], static_cast<int>(k));
  return g;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace qcalc
