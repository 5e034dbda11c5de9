#include "wexc/exactmath.hpp"

#include "wide.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wexc {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t n) {
  std::vector<BigInt> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

IntPoly poly_mul(const IntPoly& f, const IntPoly& g) { return f * g; }

IntPoly poly_rem_monic(const IntPoly& f, const IntPoly& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (divisor.leading() != 1) throw std::invalid_argument("poly_rem_monic: divisor is not monic");
  const long n = divisor.degree();
  if (f.degree() < n) return f;
  std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
  auto d = divisor.coeffs();
  for (long k = static_cast<long>(r.size()) - 1; k >= n; --k) {
    if (sgn(r[k]) == 0) continue;
    const BigInt factor = r[k];
    for (long i = 0; i <= n; ++i) {
      mpz_submul(r[k - n + i].get_mpz_t(), factor.get_mpz_t(), d[i].get_mpz_t());
    }
  }
  r.resize(static_cast<std::size_t>(n));
  return IntPoly(std::move(r));
}

IntPoly poly_divexact(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw std::domain_error("poly_divexact: divisor does not divide");
  std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
  auto d = g.coeffs();
  const long n = g.degree();
  std::vector<BigInt> quot(static_cast<std::size_t>(f.degree() - n + 1));
  for (long k = f.degree(); k >= n; --k) {
    if (sgn(r[k]) == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), g.leading().get_mpz_t()))
      throw std::domain_error("poly_divexact: divisor does not divide");
    BigInt qk;
    mpz_divexact(qk.get_mpz_t(), r[k].get_mpz_t(), g.leading().get_mpz_t());
    for (long i = 0; i <= n; ++i) mpz_submul(r[k - n + i].get_mpz_t(), qk.get_mpz_t(), d[i].get_mpz_t());
    quot[k - n] = std::move(qk);
  }
  for (long i = 0; i < n; ++i)
    if (sgn(r[i]) != 0) throw std::domain_error("poly_divexact: divisor does not divide");
  return IntPoly(std::move(quot));
}

IntPoly poly_prem(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("pseudo-division by the zero polynomial");
  if (f.degree() < g.degree()) return f;
  const long n = g.degree();
  const BigInt& lc = g.leading();
  auto d = g.coeffs();
  std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
  // Every step scales by lc(g), including steps whose top coefficient is
  // already zero, so the total factor is lc^(deg f - deg g + 1).
  for (long k = f.degree(); k >= n; --k) {
    const BigInt top = r[k];
    for (long i = 0; i < k; ++i) r[i] *= lc;
    if (sgn(top) != 0) {
      for (long i = 0; i < n; ++i) mpz_submul(r[k - n + i].get_mpz_t(), top.get_mpz_t(), d[i].get_mpz_t());
    }
    r[k] = 0;
  }
  r.resize(static_cast<std::size_t>(n));
  return IntPoly(std::move(r));
}

namespace {

IntPoly divexact_scalar(const IntPoly& f, const BigInt& c) {
  std::vector<BigInt> v(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(v));
}

bool odd(long v) { return (v & 1) != 0; }

}  // namespace

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// Sub-resultant PRS (Collins / Brown), all divisions exact.
BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero()) throw std::invalid_argument("resultant: first argument is the zero polynomial");
  if (g.is_zero()) return 0;
  if (f.degree() == 0) return big_pow(f.leading(), static_cast<std::uint64_t>(g.degree()));
  if (g.degree() == 0) return big_pow(g.leading(), static_cast<std::uint64_t>(f.degree()));

  const BigInt ca = f.content();
  const BigInt cb = g.content();
  IntPoly a = divexact_scalar(f, ca);
  IntPoly b = divexact_scalar(g, cb);
  const BigInt t = big_pow(ca, static_cast<std::uint64_t>(g.degree())) *
                   big_pow(cb, static_cast<std::uint64_t>(f.degree()));

  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (odd(a.degree()) && odd(b.degree())) s = -1;
  }

  BigInt gg = 1;
  BigInt h = 1;
  for (;;) {
    const long delta = a.degree() - b.degree();
    if (odd(a.degree()) && odd(b.degree())) s = -s;
    IntPoly r = poly_prem(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    const BigInt divisor = gg * big_pow(h, static_cast<std::uint64_t>(delta));
    b = divexact_scalar(r, divisor);
    gg = a.leading();
    if (delta > 0) {
      BigInt num = big_pow(gg, static_cast<std::uint64_t>(delta));
      BigInt den = big_pow(h, static_cast<std::uint64_t>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) break;
  }
  const auto da = static_cast<std::uint64_t>(a.degree());
  BigInt num = big_pow(b.leading(), da);
  BigInt den = big_pow(h, da - 1);
  BigInt last;
  mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * last;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) mpz_swap((*this)(a, c).get_mpz_t(), (*this)(b, c).get_mpz_t());
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) mpz_swap((*this)(r, a).get_mpz_t(), (*this)(r, b).get_mpz_t());
}

BigInt bareiss_det(const IntMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("bareiss_det: matrix is not square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt prev = 1;
  int sign = 1;
  BigInt tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // m(i,j) = (m(i,j) * m(k,k) - m(i,k) * m(k,j)) / prev, exact.
        mpz_mul(tmp.get_mpz_t(), m(i, j).get_mpz_t(), m(k, k).get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  BigInt det = m(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

// ---------------------------------------------------------------------------
// Smith normal form

BigInt SmithForm::nonzero_product() const {
  BigInt p = 1;
  for (const auto& d : invariant_factors)
    if (sgn(d) != 0) p *= d;
  return p;
}

std::size_t SmithForm::rank() const {
  return static_cast<std::size_t>(std::count_if(invariant_factors.begin(), invariant_factors.end(),
                                                [](const BigInt& d) { return sgn(d) != 0; }));
}

namespace {

// Moves the nonzero entry of least magnitude in the trailing submatrix to
// (t, t). Returns false if the submatrix is zero.
bool bring_min_to_pivot(IntMatrix& a, std::size_t t) {
  std::size_t br = 0, bc = 0;
  bool found = false;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      if (!found || mpz_cmpabs(a(i, j).get_mpz_t(), a(br, bc).get_mpz_t()) < 0) {
        br = i;
        bc = j;
        found = true;
      }
    }
  }
  if (!found) return false;
  a.swap_rows(t, br);
  a.swap_cols(t, bc);
  return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t r = std::min(a.rows(), a.cols());
  SmithForm out;
  out.invariant_factors.assign(r, BigInt(0));
  BigInt q;
  for (std::size_t t = 0; t < r; ++t) {
    if (!bring_min_to_pivot(a, t)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(a(i, t)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t j = t; j < a.cols(); ++j) mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(t, j).get_mpz_t());
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(a(t, j)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t i = t; i < a.rows(); ++i) mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(i, t).get_mpz_t());
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) {
        bring_min_to_pivot(a, t);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remainder.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            for (std::size_t c = t; c < a.cols(); ++c) a(t, c) += a(i, c);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.invariant_factors[t] = abs(a(t, t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Primality and factorization

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const BigInt& n, const BigInt& nm1, const BigInt& d, unsigned s, unsigned base) {
  BigInt x;
  BigInt b = base;
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Pollard rho with Brent's cycle detection. Returns a nontrivial factor of
// composite n (n odd, not a perfect square).
BigInt pollard_brent(const BigInt& n) {
  constexpr unsigned kBatch = 128;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1, tmp;
    BigInt cc = c;
    unsigned long r = 1;
    auto step = [&](BigInt& v) {
      mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
      v += cc;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min<unsigned long>(kBatch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          tmp = x - y;
          q *= abs(tmp);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Batched gcd overshot; retrace one step at a time.
      do {
        step(ys);
        tmp = abs(BigInt(x - ys));
        mpz_gcd(g.get_mpz_t(), tmp.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const BigInt& n, std::vector<BigInt>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split_into(root, primes);
    split_into(root, primes);
    return;
  }
  const BigInt d = pollard_brent(n);
  split_into(d, primes);
  split_into(BigInt(n / d), primes);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned, 13> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  // Deterministic for n < 3317044064679887385961981 with the bases above.
  static const BigInt kDeterministicLimit("3317044064679887385961981");
  if (n >= kDeterministicLimit) return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
  BigInt nm1 = n - 1;
  BigInt d = nm1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned p : kBases)
    if (!miller_rabin_round(n, nm1, d, s, p)) return false;
  return true;
}

namespace {
bool is_prime_u64(std::uint64_t n);
}  // namespace

bool is_prime(std::uint64_t n) { return is_prime_u64(n); }

BigInt Factorization::value() const {
  BigInt v = 1;
  for (const auto& pp : pairs) v *= big_pow(pp.prime, pp.exponent);
  return v;
}

std::string Factorization::to_string() const {
  if (pairs.empty()) return "1";
  std::string s;
  for (const auto& pp : pairs) {
    if (!s.empty()) s += '*';
    s += pp.prime.get_str();
    if (pp.exponent > 1) s += '^' + std::to_string(pp.exponent);
  }
  return s;
}

namespace {

using u64 = std::uint64_t;
using detail::u128;

u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 powmod(u64 b, u64 e, u64 n) {
  u64 r = 1 % n;
  b %= n;
  while (e) {
    if (e & 1) r = mulmod(r, b, n);
    b = mulmod(b, b, n);
    e >>= 1;
  }
  return r;
}

// Deterministic for every 64-bit n with these bases.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

u64 pollard_brent_u64(u64 n) {
  if (n % 2 == 0) return 2;
  constexpr u64 kBatch = 128;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 0, ys = 0, q = 1, g = 1, r = 1;
    auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        const u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += lim;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = pollard_brent_u64(n);
  split_u64(d, primes);
  split_u64(n / d, primes);
}

BigInt from_u64(u64 v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return r;
}

Factorization factorize_u64(u64 n) {
  std::vector<u64> primes;
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  split_u64(n, primes);
  std::sort(primes.begin(), primes.end());
  Factorization out;
  for (u64 p : primes) {
    if (!out.pairs.empty() && out.pairs.back().prime == from_u64(p)) {
      ++out.pairs.back().exponent;
    } else {
      out.pairs.push_back({from_u64(p), 1});
    }
  }
  return out;
}

}  // namespace

Factorization factorize(const BigInt& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("factorize: argument must be positive");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    u64 v = 0;
    mpz_export(&v, nullptr, 1, sizeof v, 0, 0, n.get_mpz_t());
    return factorize_u64(v);
  }
  Factorization out;
  BigInt rest = n;
  for (std::uint32_t p : small_primes()) {
    if (BigInt(p) * p > rest) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    out.pairs.push_back({BigInt(p), e});
  }
  if (rest == 1) return out;

  std::vector<BigInt> large;
  split_into(rest, large);
  std::sort(large.begin(), large.end());
  for (const auto& p : large) {
    if (!out.pairs.empty() && out.pairs.back().prime == p) {
      ++out.pairs.back().exponent;
    } else {
      out.pairs.push_back({p, 1});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Number-theoretic helpers

std::vector<std::uint64_t> prime_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t phi = m;
  for (std::uint64_t p : prime_divisors(m)) phi = phi / p * (p - 1);
  return phi;
}

IntPoly cyclotomic_poly(std::size_t m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_poly: order must be positive");
  IntPoly divisor = IntPoly::constant(1);
  for (std::size_t d = 1; d < m; ++d)
    if (m % d == 0) divisor = divisor * cyclotomic_poly(d);
  return poly_divexact(IntPoly::x_pow_minus_one(m), divisor);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace wexc
