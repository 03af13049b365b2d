#include "braidquot/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "braidquot/error.hpp"

namespace braidquot {
namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

// Fixed moduli, coefficients low -> high. Irreducibility is re-certified at
// construction (a reducible modulus would leave a zero divisor and fail the
// inverse self-check below).
struct PrimePower {
  int q, p, deg;
  std::uint8_t mod[5];
};
constexpr PrimePower kPowers[] = {
    {4, 2, 2, {1, 1, 1}},       // x^2 + x + 1
    {8, 2, 3, {1, 1, 0, 1}},    // x^3 + x + 1
    {9, 3, 2, {1, 0, 1}},       // x^2 + 1
    {16, 2, 4, {1, 1, 0, 0, 1}},// x^4 + x + 1
    {25, 5, 2, {1, 1, 1}},      // x^2 + x + 1
    {27, 3, 3, {1, 2, 0, 1}},   // x^3 + 2x + 1
    {49, 7, 2, {3, 1, 1}},      // x^2 + x + 3
};

const PrimePower* find_power(int q) {
  for (const auto& pp : kPowers)
    if (pp.q == q) return &pp;
  return nullptr;
}

bool is_supported_prime(int q) {
  for (int p : kPrimes)
    if (p == q) return true;
  return false;
}

using Poly = std::vector<int>;  // digits, low -> high, length deg

Poly digits_of(int index, int p, int deg) {
  Poly d(deg);
  for (int i = 0; i < deg; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

int index_of(const Poly& d, int p) {
  int idx = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) idx = idx * p + d[i];
  return idx;
}

}  // namespace

FqField::FqField(int q) : q_(q) {
  if (const PrimePower* pp = find_power(q)) {
    p_ = pp->p;
    deg_ = pp->deg;
    mod_.assign(pp->mod, pp->mod + pp->deg + 1);
  } else if (is_supported_prime(q)) {
    p_ = q;
    deg_ = 1;
    mod_ = {0, 1};  // unused for prime fields
  } else {
    throw Error("unsupported field size q=" + std::to_string(q));
  }

  add_.resize(static_cast<std::size_t>(q) * q);
  mul_.resize(static_cast<std::size_t>(q) * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    Poly da = digits_of(a, p_, deg_);
    // negation
    Poly dn(deg_);
    for (int i = 0; i < deg_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<std::uint8_t>(index_of(dn, p_));
    for (int b = 0; b < q; ++b) {
      Poly db = digits_of(b, p_, deg_);
      Poly ds(deg_);
      for (int i = 0; i < deg_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] =
          static_cast<std::uint8_t>(index_of(ds, p_));
      // polynomial product reduced mod the modulus
      Poly prod(2 * deg_ - 1, 0);
      for (int i = 0; i < deg_; ++i)
        for (int j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int d = 2 * deg_ - 2; d >= deg_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        // x^d == -mod_low * x^(d-deg) (modulus is monic)
        for (int i = 0; i < deg_; ++i)
          prod[d - deg_ + i] = (prod[d - deg_ + i] + c * (p_ - mod_[i])) % p_;
      }
      prod.resize(deg_);
      mul_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] =
          static_cast<std::uint8_t>(index_of(prod, p_));
    }
  }

  // Inverses; doubles as the irreducibility certificate for prime powers.
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (mul_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] == 1) {
        inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
    if (inv_[a] == 0)
      throw ValidationError("F_" + std::to_string(q) +
                            ": element without inverse; modulus not irreducible");
  }

  // Smallest multiplicative generator.
  for (int g = 1; g < q; ++g) {
    int x = g, ord = 1;
    while (x != 1) {
      x = mul_[idx(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(g))];
      ++ord;
    }
    if (ord == q - 1) {
      gen_ = static_cast<std::uint8_t>(g);
      break;
    }
  }
  if (q > 2 && gen_ == 0)
    throw ValidationError("F_" + std::to_string(q) + ": no multiplicative generator");
  if (q == 2) gen_ = 1;
}

const FqField& FqField::get(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FqField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, std::unique_ptr<FqField>(new FqField(q))).first;
  return *it->second;
}

bool FqField::supported(int q) {
  return is_supported_prime(q) || find_power(q) != nullptr;
}

std::uint8_t FqField::inv(std::uint8_t a) const {
  if (a == 0) throw Error("division by zero in F_" + std::to_string(q_));
  return inv_[a];
}

std::uint8_t FqField::pow(std::uint8_t a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  std::uint8_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string FqField::to_string(std::uint8_t a) const {
  if (deg_ == 1) return std::to_string(a);
  Poly d = digits_of(a, p_, deg_);
  std::ostringstream out;
  bool first = true;
  for (int i = deg_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0 || d[i] != 1) out << d[i];
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace braidquot
