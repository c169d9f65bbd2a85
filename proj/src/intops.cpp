#include "qhl/intops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qhl {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Pollard-Brent rho; n must be odd composite and not a prime power of the tried base.
static u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [n, c](u64 x) { return (mulmod_u64(x, x, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    int count = 0;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      u64 diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      q = mulmod_u64(q, diff, n);
      if (++count % 64 == 0) {
        d = std::gcd(q, n);
        if (d != 1) break;
      }
    }
    if (d == 1) d = std::gcd(q, n);
    if (d != 1 && d != n) return d;
  }
}

static void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

std::vector<std::pair<u64, int>> factorize_u64(u64 n) {
  std::vector<u64> primes;
  // trial division first; rho only for the hard leftover cofactor
  for (u64 p : {2ull, 3ull, 5ull}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  static const int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  u64 p = 7;
  int wi = 0;
  while (p <= 1000000 && p * p <= n) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
    p += wheel[wi];
    wi = (wi + 1) & 7;
  }
  if (n > 1) {
    if (n <= (u64)1000000 * 1000000 && !is_prime_u64(n) && isqrt64((std::int64_t)n) * isqrt64((std::int64_t)n) == (std::int64_t)n) {
      // perfect square of a prime already above the trial bound
      u64 r = (u64)isqrt64((std::int64_t)n);
      primes.push_back(r);
      primes.push_back(r);
    } else {
      factor_rec(n, primes);
    }
  }
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, int>> out;
  for (u64 q : primes) {
    if (!out.empty() && out.back().first == q) {
      ++out.back().second;
    } else {
      out.emplace_back(q, 1);
    }
  }
  return out;
}

int kronecker(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // pull out factors of 2 from n: (a/2) = 0, 1, -1 per a mod 8
  int v2 = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v2;
  }
  if (v2 & 1) {
    long long am8 = ((a % 8) + 8) % 8;
    if (am8 == 3 || am8 == 5) result = -result;
  }
  a %= n;
  if (a < 0) a += n;
  // now n odd positive, 0 <= a < n: Jacobi loop
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      long long nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    std::swap(a, n);
    if ((a % 4) == 3 && (n % 4) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::int64_t sqrt_mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  if (p == 2) return a & 1;
  if (powmod_u64((u64)a, (u64)((p - 1) / 2), (u64)p) != 1) return -1;
  if (p % 4 == 3) return (std::int64_t)powmod_u64((u64)a, (u64)((p + 1) / 4), (u64)p);
  // Tonelli-Shanks
  std::int64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::int64_t z = 2;
  while (powmod_u64((u64)z, (u64)((p - 1) / 2), (u64)p) != (u64)(p - 1)) ++z;
  u64 m = s, c = powmod_u64((u64)z, (u64)q, (u64)p);
  u64 t = powmod_u64((u64)a, (u64)q, (u64)p);
  u64 r = powmod_u64((u64)a, (u64)((q + 1) / 2), (u64)p);
  while (t != 1) {
    u64 t2 = t;
    u64 i = 0;
    while (t2 != 1) {
      t2 = mulmod_u64(t2, t2, (u64)p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, (u64)p);
    m = i;
    c = mulmod_u64(b, b, (u64)p);
    t = mulmod_u64(t, c, (u64)p);
    r = mulmod_u64(r, b, (u64)p);
  }
  return (std::int64_t)r;
}

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt64 of negative");
  std::int64_t r = (std::int64_t)std::sqrt((double)n);
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace qhl
