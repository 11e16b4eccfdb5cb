#include "prank/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace prank {

namespace {

constexpr uint32_t kTableLimit = 1024;  // build q*q lookup tables up to this q

// Dense little-endian polynomial arithmetic over F_p, used only during
// context construction (modulus search and reduction).
using Poly = std::vector<uint32_t>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(r);
}

// a mod f, f monic.
Poly poly_mod(Poly a, const Poly& f, uint32_t p) {
  a = trim(a);
  while (a.size() >= f.size()) {
    uint32_t lead = a.back();
    size_t shift = a.size() - f.size();
    for (size_t i = 0; i < f.size(); ++i) {
      uint32_t t = (lead * f[i]) % p;
      a[shift + i] = (a[shift + i] + p - t) % p;
    }
    a = trim(a);
  }
  return a;
}

bool poly_divides(const Poly& d, const Poly& f, uint32_t p) {
  return poly_mod(f, d, p).empty();
}

// Irreducibility by trial division: no monic divisor of degree 1..deg/2.
bool poly_irreducible(const Poly& f, uint32_t p) {
  uint32_t deg = uint32_t(f.size() - 1);
  if (deg == 1) return true;
  for (uint32_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      uint64_t t = idx;
      for (uint32_t i = 0; i < d; ++i) { g[i] = uint32_t(t % p); t /= p; }
      g[d] = 1;
      if (poly_divides(g, f, p)) return false;
    }
  }
  return true;
}

Poly default_modulus(uint32_t p, uint32_t k) {
  if (k == 1) return Poly{0, 1};
  uint64_t count = 1;
  for (uint32_t i = 0; i < k; ++i) count *= p;
  for (uint64_t idx = 0; idx < count; ++idx) {
    Poly f(k + 1, 0);
    uint64_t t = idx;
    for (uint32_t i = 0; i < k; ++i) { f[i] = uint32_t(t % p); t /= p; }
    f[k] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  throw std::logic_error("default_modulus: no irreducible found");  // unreachable
}

std::mutex g_registry_mutex;
std::map<std::pair<uint32_t, std::vector<uint32_t>>, std::unique_ptr<FieldCtx>>& registry() {
  static std::map<std::pair<uint32_t, std::vector<uint32_t>>, std::unique_ptr<FieldCtx>> r;
  return r;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool fits_budget(uint64_t base, uint64_t exp, uint64_t limit, uint64_t* out) {
  uint64_t v = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (v > limit / base) return false;
    v *= base;
  }
  if (out) *out = v;
  return v <= limit;
}

const FieldCtx* FieldCtx::get(uint32_t p, uint32_t k) {
  if (!is_prime(p) || p < 3) throw precondition_error("FieldCtx: p must be a prime >= 3");
  if (k < 1) throw precondition_error("FieldCtx: extension degree must be >= 1");
  Poly mod = default_modulus(p, k);
  std::vector<uint32_t> key(mod.begin(), mod.end());
  return get(p, key);
}

const FieldCtx* FieldCtx::get(uint32_t p, const std::vector<uint32_t>& modulus) {
  if (!is_prime(p) || p < 3) throw precondition_error("FieldCtx: p must be a prime >= 3");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw precondition_error("FieldCtx: modulus must be monic of degree >= 1");
  for (uint32_t c : modulus)
    if (c >= p) throw precondition_error("FieldCtx: modulus coefficient out of range");
  if (modulus.size() > 2 && !poly_irreducible(Poly(modulus.begin(), modulus.end()), p))
    throw precondition_error("FieldCtx: modulus is reducible");

  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto key = std::make_pair(p, modulus);
  auto it = registry().find(key);
  if (it == registry().end())
    it = registry().emplace(key, std::unique_ptr<FieldCtx>(new FieldCtx(p, modulus))).first;
  return it->second.get();
}

FieldCtx::FieldCtx(uint32_t p, std::vector<uint32_t> modulus)
    : p_(p), k_(uint32_t(modulus.size() - 1)), modulus_(std::move(modulus)) {
  uint64_t q = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    q *= p_;
    if (q > (1u << 22)) throw capacity_error("FieldCtx: field too large", 1u << 22);
  }
  q_ = uint32_t(q);
  tab_ = q_ <= kTableLimit;

  neg_.resize(q_);
  inv_.resize(q_);
  frob_.resize(q_);
  if (tab_) {
    add_.resize(size_t(q_) * q_);
    mul_.resize(size_t(q_) * q_);
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = 0; b < q_; ++b) {
        add_[size_t(a) * q_ + b] = add_slow(a, b);
        mul_[size_t(a) * q_ + b] = mul_slow(a, b);
      }
  }
  for (uint32_t a = 0; a < q_; ++a) {
    // negation digit-wise
    uint32_t v = 0, mulp = 1, t = a;
    for (uint32_t i = 0; i < k_; ++i) {
      uint32_t d = t % p_;
      v += ((p_ - d) % p_) * mulp;
      mulp *= p_;
      t /= p_;
    }
    neg_[a] = v;
  }
  for (uint32_t a = 1; a < q_; ++a) inv_[a] = pow(a, q_ - 2);
  inv_[0] = 0;
  for (uint32_t a = 0; a < q_; ++a) frob_[a] = pow(a, p_);
}

uint32_t FieldCtx::add_slow(uint32_t a, uint32_t b) const {
  uint32_t v = 0, mulp = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    v += ((a % p_ + b % p_) % p_) * mulp;
    a /= p_;
    b /= p_;
    mulp *= p_;
  }
  return v;
}

uint32_t FieldCtx::mul_slow(uint32_t a, uint32_t b) const {
  Poly pa(k_, 0), pb(k_, 0);
  uint32_t t = a;
  for (uint32_t i = 0; i < k_; ++i) { pa[i] = t % p_; t /= p_; }
  t = b;
  for (uint32_t i = 0; i < k_; ++i) { pb[i] = t % p_; t /= p_; }
  Poly pr = poly_mod(poly_mul(trim(pa), trim(pb), p_), Poly(modulus_.begin(), modulus_.end()), p_);
  uint32_t v = 0, mulp = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    v += (i < pr.size() ? pr[i] : 0) * mulp;
    mulp *= p_;
  }
  return v;
}

uint32_t FieldCtx::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1, base = a;
  while (e) {
    if (e & 1) r = tab_ ? mul_[size_t(r) * q_ + base] : mul_slow(r, base);
    base = tab_ ? mul_[size_t(base) * q_ + base] : mul_slow(base, base);
    e >>= 1;
  }
  return r;
}

uint32_t FieldCtx::coeff(uint32_t a, uint32_t i) const {
  for (uint32_t j = 0; j < i; ++j) a /= p_;
  return a % p_;
}

uint32_t FieldCtx::encode(const std::vector<uint32_t>& coeffs) const {
  if (coeffs.size() != k_) throw shape_error("FieldCtx::encode: wrong coefficient count");
  uint32_t v = 0, mulp = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    if (coeffs[i] >= p_) throw std::domain_error("FieldCtx::encode: coefficient out of range");
    v += coeffs[i] * mulp;
    mulp *= p_;
  }
  return v;
}

std::string FieldCtx::element_str(uint32_t a) const {
  if (k_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << "(";
  for (uint32_t i = 0; i < k_; ++i) {
    if (i) os << ",";
    os << coeff(a, i);
  }
  os << ")";
  return os.str();
}

}  // namespace prank
