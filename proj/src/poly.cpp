#include "hcot/poly.hpp"

#include <algorithm>

#include "hcot/errors.hpp"

namespace hcot {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mul(const Poly& a, const Poly& b, const PrimeField& f) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  trim(r);
  return r;
}

Poly mod(Poly a, const Poly& m, const PrimeField& f) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Scalar lead_inv = f.inv(m.back());
  while (a.size() > dm) {
    Scalar c = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b, const PrimeField& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

// base^e mod m
Poly powmod(Poly base, std::uint64_t e, const Poly& m, const PrimeField& f) {
  Poly result{1};
  base = mod(base, m, f);
  while (e) {
    if (e & 1) result = mod(mul(result, base, f), m, f);
    base = mod(mul(base, base, f), m, f);
    e >>= 1;
  }
  return result;
}

Poly sub(Poly a, const Poly& b, const PrimeField& f) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

// h is monic, squarefree and splits into distinct linear factors.
void split_linear(const Poly& h, const PrimeField& f, Rng& rng, std::vector<Scalar>& out) {
  if (h.size() < 2) return;
  if (h.size() == 2) {
    out.push_back(f.neg(h[0]));
    return;
  }
  if (f.p() == 2) {
    // degree >= 2 with distinct roots in GF(2) means h = x(x+1)
    out.push_back(0);
    out.push_back(1);
    return;
  }
  while (true) {
    Scalar delta = rng.scalar(f);
    Poly t = powmod({delta, 1}, (f.p() - 1) / 2, h, f);
    Poly g = gcd(sub(t, {1}, f), h, f);
    if (g.size() > 1 && g.size() < h.size()) {
      split_linear(g, f, rng, out);
      Poly rest;
      {
        Poly num = h;
        rest.assign(num.size() - g.size() + 1, 0);
        for (std::size_t i = rest.size(); i-- > 0;) {
          Scalar c = num[i + g.size() - 1];
          rest[i] = c;
          for (std::size_t j = 0; j < g.size(); ++j)
            num[i + j] = f.sub(num[i + j], f.mul(c, g[j]));
        }
      }
      split_linear(rest, f, rng, out);
      return;
    }
  }
}

}  // namespace

Poly char_poly(const Mat& a) {
  if (!a.is_square()) throw ContractViolation("char_poly: matrix not square");
  const auto& f = a.field();
  const std::size_t n = a.rows();
  Mat h = a;
  // similarity reduction to upper Hessenberg form
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = n;
    for (std::size_t i = m; i < n; ++i)
      if (h(i, m - 1)) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    Scalar inv = f.inv(h(m, m - 1));
    for (std::size_t i = m + 1; i < n; ++i) {
      Scalar u = f.mul(h(i, m - 1), inv);
      if (!u) continue;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = f.sub(h(i, j), f.mul(u, h(m, j)));
      for (std::size_t r = 0; r < n; ++r) h(r, m) = f.add(h(r, m), f.mul(u, h(r, i)));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly cur = mul({f.neg(h(m - 1, m - 1)), 1}, p[m - 1], f);
    Scalar t = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      t = f.mul(t, h(i + 1, i));
      Scalar c = f.mul(h(i, m - 1), t);
      if (!c) continue;
      Poly term = p[i];
      for (auto& x : term) x = f.mul(x, c);
      cur = sub(cur, term, f);
    }
    cur.resize(m + 1, 0);
    p[m] = cur;
  }
  Poly out = p[n];
  out.resize(n + 1, 0);
  return out;
}

std::vector<Scalar> poly_roots(const Poly& fpoly, const PrimeField& f, Rng& rng) {
  Poly a = fpoly;
  trim(a);
  std::vector<Scalar> out;
  if (a.size() < 2) return out;
  if (f.p() <= 64) {
    for (Scalar x = 0; x < f.p(); ++x) {
      Scalar v = 0;
      for (std::size_t i = a.size(); i-- > 0;) v = f.add(f.mul(v, x), a[i]);
      if (!v) out.push_back(x);
    }
    return out;
  }
  Poly xp = powmod({0, 1}, f.p(), a, f);
  Poly g = gcd(sub(xp, {0, 1}, f), a, f);
  split_linear(g, f, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hcot
