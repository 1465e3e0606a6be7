#include "wpc/order.hpp"
#include "wpc/arith.hpp"
#include "wpc/fpmat.hpp"
#include "wpc/modpoly.hpp"
#include "wpc/errors.hpp"
#include <algorithm>

namespace wpc {

namespace {

/* deterministic generator for splitting-element candidates */
struct lcg {
  unsigned long long s;
  explicit lcg(unsigned long long seed) : s(seed) {}
  unsigned long long next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 17;
  }
};

std::vector<unsigned long> vec_mod_p(const std::vector<Rat>& v, const Int& p) {
  std::vector<unsigned long> out(v.size());
  for (size_t j = 0; j < v.size(); j++) {
    check(v[j].get_den() == 1, "coordinates not integral");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v[j].get_num().get_mpz_t(), p.get_mpz_t());
    out[j] = r.get_ui();
  }
  return out;
}

/* u with u g == 1 mod m, for g coprime to m */
fp_poly fpp_invmod(const fp_poly& g, const fp_poly& m) {
  unsigned long p = m.p;
  fp_poly r0 = m, r1 = fp_mod(g, m);
  fp_poly t0 = fp_make(p, {}), t1 = fp_make(p, {1});
  while (!r1.is_zero()) {
    fp_poly q, r;
    fp_divmod(r0, r1, q, r);
    fp_poly tn = fp_sub(t0, fp_mul(q, t1));
    r0 = r1;
    r1 = r;
    t0 = t1;
    t1 = tn;
  }
  check(r0.deg() == 0, "inverse modulo a non coprime polynomial");
  unsigned long u = fp_inv(r0.c[0], p);
  fp_poly out = t0;
  for (auto& c : out.c) c = (unsigned long)(((unsigned __int128)c * u) % p);
  out.normalize();
  return fp_mod(out, m);
}

struct fp_block {
  fp_mat basis;                  /* rows in semisimple-part coordinates */
  std::vector<unsigned long> id; /* identity of the block */
};

}

std::vector<prime_ideal> primes_above(const etale_alg& a, const ring_order& s, const Int& p) {
  if (!is_prime(p)) fail(errkind::bad_input, "primes_above needs a prime");
  if (!p.fits_ulong_p() || !p.fits_slong_p())
    fail(errkind::not_supported, "prime too large for residue arithmetic");
  unsigned long pu = p.get_ui();
  int n = a.n;
  auto bs = lattice_elements(s.l);

  /* structure constants of s/ps in the lattice basis */
  std::vector<std::vector<std::vector<unsigned long>>> sc(n);
  for (int i = 0; i < n; i++) {
    sc[i].resize(n);
    for (int j = 0; j < n; j++)
      sc[i][j] = vec_mod_p(lattice_coords(s.l, el_mul(a, bs[i], bs[j])), p);
  }
  auto mul_a = [&](const std::vector<unsigned long>& x, const std::vector<unsigned long>& y) {
    std::vector<unsigned long> out(n, 0);
    for (int i = 0; i < n; i++) {
      if (!x[i]) continue;
      for (int j = 0; j < n; j++) {
        if (!y[j]) continue;
        unsigned long c = (unsigned long)(((unsigned __int128)x[i] * y[j]) % pu);
        for (int k = 0; k < n; k++)
          out[k] = (unsigned long)((out[k] + (unsigned __int128)c * sc[i][j][k]) % pu);
      }
    }
    return out;
  };
  std::vector<unsigned long> one_a = vec_mod_p(lattice_coords(s.l, el_one(a)), p);

  /* the p-power map is linear; its iterates cut out the nilradical */
  fp_mat frob(n);
  for (int i = 0; i < n; i++) {
    std::vector<unsigned long> acc = one_a, base(n, 0);
    base[i] = 1;
    size_t bits = mpz_sizeinbase(p.get_mpz_t(), 2);
    for (size_t b = bits; b-- > 0;) {
      acc = mul_a(acc, acc);
      if (mpz_tstbit(p.get_mpz_t(), b)) acc = mul_a(acc, base);
    }
    frob[i] = acc;
  }
  long m = 0;
  {
    Int pk(1);
    while (pk < n) {
      pk *= p;
      m++;
    }
    if (m == 0) m = 1;
  }
  fp_mat rad = fpm_left_kernel(fpm_pow(frob, m, pu), pu);
  int r = (int)rad.size();
  int t = n - r;
  check(t >= 1, "radical cannot be everything");

  /* complement spanned by unit vectors at the non pivot columns */
  fp_mat rad_ech = rad;
  std::vector<int> pivots = fpm_echelon(rad_ech, pu);
  fp_mat mfull = rad;
  {
    std::vector<char> is_pivot(n, 0);
    for (int c : pivots) is_pivot[c] = 1;
    for (int c = 0; c < n; c++)
      if (!is_pivot[c]) {
        std::vector<unsigned long> u(n, 0);
        u[c] = 1;
        mfull.push_back(u);
      }
  }
  fp_mat minv = fpm_inverse(mfull, pu);
  /* projection to the semisimple part: trailing t coordinates of x minv */
  auto proj = [&](const std::vector<unsigned long>& x) {
    std::vector<unsigned long> out(t, 0);
    for (int i = 0; i < n; i++) {
      if (!x[i]) continue;
      for (int j = 0; j < t; j++)
        out[j] = (unsigned long)((out[j] + (unsigned __int128)x[i] * minv[i][r + j]) % pu);
    }
    return out;
  };
  /* multiplication on the semisimple part through representatives */
  auto lift_b = [&](const std::vector<unsigned long>& x) {
    std::vector<unsigned long> out(n, 0);
    for (int j = 0; j < t; j++) {
      if (!x[j]) continue;
      for (int k = 0; k < n; k++)
        out[k] = (unsigned long)((out[k] + (unsigned __int128)x[j] * mfull[r + j][k]) % pu);
    }
    return out;
  };
  auto mul_b = [&](const std::vector<unsigned long>& x, const std::vector<unsigned long>& y) {
    return proj(mul_a(lift_b(x), lift_b(y)));
  };

  /* split the semisimple part into fields by factoring minimal polynomials */
  std::vector<fp_block> todo, fields;
  {
    fp_block whole;
    whole.basis = fpm_identity(t);
    whole.id = proj(one_a);
    todo.push_back(whole);
  }
  lcg rng(0x5eed);
  int guard = 0;
  while (!todo.empty()) {
    fp_block blk = todo.back();
    todo.pop_back();
    int d = (int)blk.basis.size();
    if (d == 1) {
      fields.push_back(blk);
      continue;
    }
    bool split = false;
    for (int cand = 0; cand < 500 && !split; cand++) {
      check(++guard < 100000, "field splitting did not converge");
      std::vector<unsigned long> y;
      if (cand < d) {
        y = blk.basis[cand];
      } else {
        y.assign(t, 0);
        for (int i = 0; i < d; i++) {
          unsigned long c = (unsigned long)(rng.next() % pu);
          for (int j = 0; j < t; j++)
            y[j] = (unsigned long)((y[j] + (unsigned __int128)c * blk.basis[i][j]) % pu);
        }
      }
      /* powers of y inside the block, then the first linear relation */
      std::vector<std::vector<unsigned long>> pows = {blk.id, y};
      fp_poly minpoly;
      for (int k = 1;; k++) {
        fp_mat ker = fpm_left_kernel(pows, pu);
        if (!ker.empty()) {
          check(ker.size() == 1, "first relation is unique");
          auto& rel = ker[0];
          check(rel[k] != 0, "relation must involve the top power");
          unsigned long inv = fp_inv(rel[k], pu);
          std::vector<unsigned long> mc(k + 1);
          for (int i = 0; i <= k; i++)
            mc[i] = (unsigned long)(((unsigned __int128)rel[i] * inv) % pu);
          minpoly = fp_make(pu, mc);
          break;
        }
        check(k <= d, "minimal polynomial degree exceeds the block");
        pows.push_back(mul_b(pows.back(), y));
      }
      check(fp_is_squarefree(minpoly), "semisimple part has separable elements");
      std::vector<fp_poly> facs = fp_factor_squarefree(minpoly);
      if (facs.size() == 1) {
        if (minpoly.deg() == d) {
          fields.push_back(blk);
          split = true;
        }
        continue; /* y does not separate anything, next candidate */
      }
      for (auto& mt : facs) {
        fp_poly ht, rem;
        fp_divmod(minpoly, mt, ht, rem);
        check(rem.is_zero(), "factor must divide");
        fp_poly w = fp_mod(fp_mul(ht, fpp_invmod(ht, mt)), minpoly);
        std::vector<unsigned long> et(t, 0);
        for (int i = 0; i <= w.deg(); i++) {
          if (!w.c[i]) continue;
          for (int j = 0; j < t; j++)
            et[j] = (unsigned long)((et[j] + (unsigned __int128)w.c[i] * pows[i][j]) % pu);
        }
        check(mul_b(et, et) == et, "splitting element is idempotent");
        fp_block sub;
        for (auto& b : blk.basis) sub.basis.push_back(mul_b(b, et));
        fpm_echelon(sub.basis, pu);
        check(!sub.basis.empty(), "block piece is nonzero");
        sub.id = et;
        todo.push_back(sub);
      }
      split = true;
    }
    check(split, "no splitting element found");
  }

  /* one maximal ideal per field block: the kernel of x -> proj(x) e_j */
  std::vector<prime_ideal> out;
  for (auto& fb : fields) {
    fp_mat mm(n);
    for (int i = 0; i < n; i++) {
      std::vector<unsigned long> u(n, 0);
      u[i] = 1;
      mm[i] = mul_b(proj(u), fb.id);
    }
    fp_mat ker = fpm_left_kernel(mm, pu);
    std::vector<alg_elt> gens;
    for (auto& b : bs) gens.push_back(el_scale(b, Rat(p)));
    for (auto& kr : ker) {
      alg_elt v = el_zero(a);
      for (int j = 0; j < n; j++)
        if (kr[j]) v = el_add(v, el_scale(bs[j], Rat(Int(kr[j]))));
      gens.push_back(v);
    }
    prime_ideal pr{span_of(a, gens), (int)fb.basis.size()};
    Rat idx = lattice_index(s.l, pr.l);
    Int want;
    mpz_pow_ui(want.get_mpz_t(), p.get_mpz_t(), pr.res_deg);
    check(idx == Rat(want), "residue degree matches the index");
    check(lattice_contains(pr.l, ideal_mul(a, s.l, pr.l)), "maximal ideal is a module");
    out.push_back(pr);
  }
  std::sort(out.begin(), out.end(), [](const prime_ideal& x, const prime_ideal& y) {
    if (x.res_deg != y.res_deg) return x.res_deg < y.res_deg;
    return lattice_less(x.l, y.l);
  });
  return out;
}

}
