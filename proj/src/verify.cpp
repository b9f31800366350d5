#include "calibra/verify.hpp"

#include <cmath>
#include <functional>

#include "calibra/octonion.hpp"
#include "calibra/sampling.hpp"
#include "calibra/spinrep.hpp"

namespace calibra {
namespace verify {

namespace {

struct Runner {
  SuiteResult result;
  Sampler rng;
  int trials;

  Runner(std::string name, std::uint64_t seed, int n)
      : rng(seed), trials(n) {
    result.suite = std::move(name);
    result.seed = seed;
    result.trials = n;
  }

  void check(const std::string& id, const std::function<double(Sampler&)>& one) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) worst = std::max(worst, one(rng));
    result.checks.push_back({id, worst});
    result.max_residual = std::max(result.max_residual, worst);
  }

  SuiteResult finish() {
    result.pass = result.max_residual <= kSuiteTol;
    return result;
  }
};

Vec unit7(Sampler& rng, const g2::CrossStructure7& s) {
  return rng.unit_vector(7, s.metric());
}

Vec unit8(Sampler& rng, const spin7::CayleyStructure8& c) {
  return rng.unit_vector(8, c.metric());
}

oct::Octonion rand_oct(Sampler& rng) {
  oct::Octonion o;
  o.re = rng.gauss();
  o.im = rng.vector(7);
  double n = std::sqrt(o.re * o.re + o.im.squaredNorm());
  return o * (1.0 / n);
}

double vnorm(const g2::CrossStructure7& s, const Vec& v) { return s.norm(v); }

}  // namespace

SuiteResult run_suite7(const std::string& name, const g2::CrossStructure7& s,
                       std::uint64_t seed, int trials) {
  Runner r(name, seed, trials);

  if (name == "cross-axioms") {
    r.check("orthogonality <uxv,u>=<uxv,v>=0", [&](Sampler& rng) {
      Vec u = unit7(rng, s), v = unit7(rng, s), x = s.cross(u, v);
      return std::max(std::abs(s.inner(x, u)), std::abs(s.inner(x, v)));
    });
    r.check("area |uxv|^2 = |u|^2|v|^2 - <u,v>^2", [&](Sampler& rng) {
      Vec u = unit7(rng, s), v = unit7(rng, s), x = s.cross(u, v);
      return std::abs(s.inner(x, x) - (1.0 - std::pow(s.inner(u, v), 2)));
    });
    r.check("AREA double-cross expansion", [&](Sampler& rng) {
      Vec u = unit7(rng, s), v = unit7(rng, s), w = unit7(rng, s);
      Vec lhs = s.cross(u, s.cross(v, w)) + s.cross(v, s.cross(u, w));
      Vec rhs = s.inner(u, w) * v + s.inner(v, w) * u - 2.0 * s.inner(u, v) * w;
      return vnorm(s, lhs - rhs);
    });
    r.check("uvw relations vxw=u, wxu=v", [&](Sampler& rng) {
      Vec u = unit7(rng, s), v0 = unit7(rng, s);
      Vec v = v0 - s.inner(u, v0) * u;
      v /= s.norm(v);
      Vec w = s.cross(u, v);
      return std::max(vnorm(s, s.cross(v, w) - u), vnorm(s, s.cross(w, u) - v));
    });
    return r.finish();
  }

  if (name == "brackets") {
    r.check("assocphi phi^2 + |[u,v,w]|^2 = |u^v^w|^2", [&](Sampler& rng) {
      Vec u = unit7(rng, s), v = unit7(rng, s), w = unit7(rng, s);
      const Vec vs[] = {u, v, w};
      double lhs = std::pow(s.phi_eval(u, v, w), 2) +
                   std::pow(vnorm(s, s.associator(u, v, w)), 2);
      return std::abs(lhs - gram_volume(vs, s.metric()));
    });
    r.check("coassocpsi psi^2 + |[u,v,w,x]|^2 = |u^v^w^x|^2", [&](Sampler& rng) {
      Vec u = unit7(rng, s), v = unit7(rng, s), w = unit7(rng, s),
          x = unit7(rng, s);
      const Vec vs[] = {u, v, w, x};
      double lhs = std::pow(s.psi_eval(u, v, w, x), 2) +
                   std::pow(vnorm(s, s.coassociator(u, v, w, x)), 2);
      return std::abs(lhs - gram_volume(vs, s.metric()));
    });
    r.check("associator alternation", [&](Sampler& rng) {
      Vec u = unit7(rng, s), v = unit7(rng, s), w = unit7(rng, s);
      double worst = vnorm(s, s.associator(u, v, w) + s.associator(v, u, w));
      worst = std::max(worst,
                       vnorm(s, s.associator(u, v, w) + s.associator(u, w, v)));
      worst = std::max(worst, vnorm(s, s.associator(u, u, w)));
      return worst;
    });
    r.check("coassociator alternation", [&](Sampler& rng) {
      Vec u = unit7(rng, s), v = unit7(rng, s), w = unit7(rng, s),
          x = unit7(rng, s);
      double worst = vnorm(s, s.coassociator(u, v, w, x) +
                                  s.coassociator(v, u, w, x));
      worst = std::max(worst, vnorm(s, s.coassociator(u, v, w, x) +
                                           s.coassociator(u, v, x, w)));
      worst = std::max(worst, vnorm(s, s.coassociator(u, v, u, x)));
      return worst;
    });
    r.check("psi adjoint <[u,v,w],x> = psi(u,v,w,x)", [&](Sampler& rng) {
      Vec u = unit7(rng, s), v = unit7(rng, s), w = unit7(rng, s),
          x = unit7(rng, s);
      return std::abs(s.inner(s.associator(u, v, w), x) -
                      s.psi_eval(u, v, w, x));
    });
    r.check("associator vanishes on u,v,uxv", [&](Sampler& rng) {
      Vec u = unit7(rng, s), v0 = unit7(rng, s);
      Vec v = v0 - s.inner(u, v0) * u;
      v /= s.norm(v);
      return vnorm(s, s.associator(u, v, s.cross(u, v)));
    });
    return r.finish();
  }

  if (name == "g2-projectors") {
    r.check("phipsiom *(psi^*(psi^w)) = w + *(phi^w)", [&](Sampler& rng) {
      AltForm w = rng.form(7, 2);
      w *= 1.0 / w.sup_norm();
      AltForm lhs = s.star(wedge(s.psi(), s.star(wedge(s.psi(), w))));
      AltForm rhs = w + s.star(wedge(s.phi(), w));
      return form_norm(lhs - rhs, s.metric());
    });
    r.check("*uphi *(phi^iota(u)phi) = 2 iota(u)phi", [&](Sampler& rng) {
      Vec u = unit7(rng, s);
      AltForm iu = contract(u, s.phi());
      return form_norm(s.star(wedge(s.phi(), iu)) - 2.0 * iu, s.metric());
    });
    r.check("*uphi |iota(u)phi|^2 = 3|u|^2", [&](Sampler& rng) {
      Vec u = unit7(rng, s);
      AltForm iu = contract(u, s.phi());
      return std::abs(form_inner(iu, iu, s.metric()) - 3.0);
    });
    r.check("*uphipsi *(psi^iota(u)phi) = 3u*", [&](Sampler& rng) {
      Vec u = unit7(rng, s);
      AltForm lhs = s.star(wedge(s.psi(), contract(u, s.phi())));
      return form_norm(lhs - 3.0 * flat_form(s.metric(), u), s.metric());
    });
    r.check("3phi4psi 3phi^iota(u)psi + 4psi^iota(u)phi = 0", [&](Sampler& rng) {
      Vec u = unit7(rng, s);
      AltForm lhs = wedge(s.phi(), contract(u, s.psi())) * 3.0 +
                    wedge(s.psi(), contract(u, s.phi())) * 4.0;
      return form_norm(lhs, s.metric());
    });
    r.check("phin (iota(u)phi)^2 ^ phi = 6|u|^2 dvol", [&](Sampler& rng) {
      Vec u = unit7(rng, s);
      AltForm iu = contract(u, s.phi());
      AltForm lhs = wedge(wedge(iu, iu), s.phi());
      return form_norm(lhs - 6.0 * s.dvol(), s.metric());
    });
    r.check("star identity *iota(u)a = (-1)^{k-1} u*^*a", [&](Sampler& rng) {
      Vec u = unit7(rng, s);
      double worst = 0.0;
      for (int k = 1; k <= 7; ++k) {
        AltForm a = rng.form(7, k);
        a *= 1.0 / a.sup_norm();
        AltForm lhs = s.star(contract(u, a));
        AltForm rhs = wedge(flat_form(s.metric(), u), s.star(a));
        if ((k - 1) % 2 == 1) rhs *= -1.0;
        worst = std::max(worst, form_norm(lhs - rhs, s.metric()));
      }
      return worst;
    });
    r.check("hodge isometry and round trip", [&](Sampler& rng) {
      double worst = 0.0;
      for (int k = 0; k <= 7; ++k) {
        AltForm a = rng.form(7, k), b = rng.form(7, k);
        double sn = std::max(a.sup_norm(), b.sup_norm());
        a *= 1.0 / sn;
        b *= 1.0 / sn;
        worst = std::max(
            worst, std::abs(form_inner(s.star(a), s.star(b), s.metric()) -
                            form_inner(a, b, s.metric())));
        double sign = ((k * (7 - k)) % 2 == 0) ? 1.0 : -1.0;
        worst = std::max(worst,
                         form_norm(s.star(s.star(a)) - sign * a, s.metric()));
      }
      return worst;
    });
    return r.finish();
  }

  if (name == "octonion-norm") {
    oct::NormedAlgebra8 alg(s);
    r.check("norm |uv| = |u||v|", [&](Sampler& rng) {
      oct::Octonion u = rand_oct(rng), v = rand_oct(rng);
      return std::abs(alg.norm(alg.product(u, v)) - alg.norm(u) * alg.norm(v));
    });
    r.check("unit law 1u = u1 = u", [&](Sampler& rng) {
      oct::Octonion u = rand_oct(rng), one = oct::Octonion::unit();
      double a = alg.norm(alg.product(one, u) - u);
      double b = alg.norm(alg.product(u, one) - u);
      return std::max(a, b);
    });
    r.check("W1 <uv,w> = <v,ubar w> = <u,w vbar>", [&](Sampler& rng) {
      oct::Octonion u = rand_oct(rng), v = rand_oct(rng), w = rand_oct(rng);
      double p = alg.inner(alg.product(u, v), w);
      double q = alg.inner(v, alg.product(alg.conjugate(u), w));
      double t = alg.inner(u, alg.product(w, alg.conjugate(v)));
      return std::max(std::abs(p - q), std::abs(p - t));
    });
    r.check("W2 u ubar = |u|^2, u vbar + v ubar = 2<u,v>", [&](Sampler& rng) {
      oct::Octonion u = rand_oct(rng), v = rand_oct(rng);
      oct::Octonion lhs = alg.product(u, alg.conjugate(u)) -
                          oct::Octonion::real(alg.inner(u, u));
      oct::Octonion lhs2 = alg.product(u, alg.conjugate(v)) +
                           alg.product(v, alg.conjugate(u)) -
                           oct::Octonion::real(2.0 * alg.inner(u, v));
      return std::max(alg.norm(lhs), alg.norm(lhs2));
    });
    r.check("W3 conjugation isometry and anti-homomorphism", [&](Sampler& rng) {
      oct::Octonion u = rand_oct(rng), v = rand_oct(rng);
      double iso = std::abs(alg.inner(u, v) -
                            alg.inner(alg.conjugate(u), alg.conjugate(v)));
      oct::Octonion anti = alg.conjugate(alg.product(u, v)) -
                           alg.product(alg.conjugate(v), alg.conjugate(u));
      return std::max(iso, alg.norm(anti));
    });
    r.check("W4 u(vbar w) + v(ubar w) = 2<u,v>w", [&](Sampler& rng) {
      oct::Octonion u = rand_oct(rng), v = rand_oct(rng), w = rand_oct(rng);
      oct::Octonion a = alg.product(u, alg.product(alg.conjugate(v), w)) +
                        alg.product(v, alg.product(alg.conjugate(u), w)) -
                        w * (2.0 * alg.inner(u, v));
      oct::Octonion b = alg.product(alg.product(u, alg.conjugate(v)), w) +
                        alg.product(alg.product(u, alg.conjugate(w)), v) -
                        u * (2.0 * alg.inner(v, w));
      return std::max(alg.norm(a), alg.norm(b));
    });
    r.check("uvcross uv - vu = 2 u1 x v1", [&](Sampler& rng) {
      oct::Octonion u = rand_oct(rng), v = rand_oct(rng);
      oct::Octonion comm = alg.product(u, v) - alg.product(v, u);
      oct::Octonion rhs = oct::Octonion::imag(2.0 * s.cross(u.im, v.im));
      return alg.norm(comm - rhs);
    });
    r.check("assocW (uv)w - u(vw) = 2[u1,v1,w1]", [&](Sampler& rng) {
      oct::Octonion u = rand_oct(rng), v = rand_oct(rng), w = rand_oct(rng);
      oct::Octonion lhs = alg.product(alg.product(u, v), w) -
                          alg.product(u, alg.product(v, w));
      oct::Octonion rhs =
          oct::Octonion::imag(2.0 * s.associator(u.im, v.im, w.im));
      return alg.norm(lhs - rhs);
    });
    return r.finish();
  }

  if (name == "octonion-triple") {
    oct::NormedAlgebra8 alg(s);
    r.check("tcW1 skew pairing of triple cross", [&](Sampler& rng) {
      oct::Octonion u = rand_oct(rng), v = rand_oct(rng), w = rand_oct(rng),
                    x = rand_oct(rng);
      return std::abs(alg.inner(x, alg.triple_cross(u, v, w)) +
                      alg.inner(alg.triple_cross(u, v, x), w));
    });
    r.check("tcW2 |uxvxw| = |u^v^w|", [&](Sampler& rng) {
      oct::Octonion u = rand_oct(rng), v = rand_oct(rng), w = rand_oct(rng);
      const Vec vs[] = {u.to_r8(), v.to_r8(), w.to_r8()};
      Mat g8 = Mat::Identity(8, 8);
      g8.block(1, 1, 7, 7) = s.metric().matrix();
      double vol = gram_volume(vs, Metric(g8));
      double n = alg.norm(alg.triple_cross(u, v, w));
      return std::abs(n * n - vol);
    });
    r.check("tcW3 <exuxv, exwxx> = -|e|^2<uxvxw, x> (orthonormal)",
            [&](Sampler& rng) {
              // Gram-Schmidt five orthonormal octonions.
              std::vector<oct::Octonion> os;
              while (os.size() < 5) {
                oct::Octonion cand = rand_oct(rng);
                for (const auto& o : os) cand = cand - o * alg.inner(o, cand);
                if (alg.norm(cand) < 1e-3) continue;
                os.push_back(cand * (1.0 / alg.norm(cand)));
              }
              const auto &e = os[0], &u = os[1], &v = os[2], &w = os[3],
                         &x = os[4];
              double lhs = alg.inner(alg.triple_cross(e, u, v),
                                     alg.triple_cross(e, w, x));
              double rhs = -alg.inner(alg.triple_cross(u, v, w), x);
              return std::abs(lhs - rhs);
            });
    r.check("tcW4 expansion via phi and brackets", [&](Sampler& rng) {
      oct::Octonion u = rand_oct(rng), v = rand_oct(rng), w = rand_oct(rng);
      oct::Octonion lhs = alg.triple_cross(u, v, w);
      oct::Octonion rhs =
          oct::Octonion::real(s.phi_eval(u.im, v.im, w.im)) -
          oct::Octonion::imag(s.associator(u.im, v.im, w.im)) -
          oct::Octonion::imag(u.re * s.cross(v.im, w.im)) -
          oct::Octonion::imag(v.re * s.cross(w.im, u.im)) -
          oct::Octonion::imag(w.re * s.cross(u.im, v.im));
      return alg.norm(lhs - rhs);
    });
    r.check("tcW5 uv = ux1xv + <u,1>v + <v,1>u - <u,v>", [&](Sampler& rng) {
      oct::Octonion u = rand_oct(rng), v = rand_oct(rng);
      oct::Octonion one = oct::Octonion::unit();
      oct::Octonion rhs = alg.triple_cross(u, one, v) + v * u.re + u * v.re -
                          one * alg.inner(u, v);
      return alg.norm(alg.product(u, v) - rhs);
    });
    // The orthogonal-triple product identity; the four signed summands of
    // the fourfold cross collapse to (u vbar)w in this case.
    r.check("orthogonalW uxvxw = (u vbar)w on orthogonal triples",
            [&](Sampler& rng) {
              std::vector<oct::Octonion> os;
              while (os.size() < 3) {
                oct::Octonion cand = rand_oct(rng);
                for (const auto& o : os) cand = cand - o * alg.inner(o, cand);
                if (alg.norm(cand) < 1e-3) continue;
                os.push_back(cand * (1.0 / alg.norm(cand)));
              }
              oct::Octonion lhs = alg.triple_cross(os[0], os[1], os[2]);
              oct::Octonion rhs = alg.product(
                  alg.product(os[0], alg.conjugate(os[1])), os[2]);
              return alg.norm(lhs - rhs);
            });
    r.check("four1 |x.u.v.w| = |x^u^v^w|", [&](Sampler& rng) {
      oct::Octonion x = rand_oct(rng), u = rand_oct(rng), v = rand_oct(rng),
                    w = rand_oct(rng);
      const Vec vs[] = {x.to_r8(), u.to_r8(), v.to_r8(), w.to_r8()};
      Mat g8 = Mat::Identity(8, 8);
      g8.block(1, 1, 7, 7) = s.metric().matrix();
      double n = alg.norm(alg.fourfold_cross(x, u, v, w));
      return std::abs(n * n - gram_volume(vs, Metric(g8)));
    });
    r.check("four2 real and imaginary parts", [&](Sampler& rng) {
      oct::Octonion x = rand_oct(rng), u = rand_oct(rng), v = rand_oct(rng),
                    w = rand_oct(rng);
      oct::Octonion f = alg.fourfold_cross(x, u, v, w);
      AltForm Phi = oct::cayley_from_g2(s);
      const Vec vs[] = {x.to_r8(), u.to_r8(), v.to_r8(), w.to_r8()};
      double re_want = eval(Phi, vs);
      Vec im_want = s.coassociator(x.im, u.im, v.im, w.im) -
                    x.re * s.associator(u.im, v.im, w.im) +
                    u.re * s.associator(v.im, w.im, x.im) -
                    v.re * s.associator(w.im, x.im, u.im) +
                    w.re * s.associator(x.im, u.im, v.im);
      return std::max(std::abs(f.re - re_want), vnorm(s, f.im - im_want));
    });
    r.check("four3 Phi^2 + |Im|^2 = |x^u^v^w|^2", [&](Sampler& rng) {
      oct::Octonion x = rand_oct(rng), u = rand_oct(rng), v = rand_oct(rng),
                    w = rand_oct(rng);
      oct::Octonion f = alg.fourfold_cross(x, u, v, w);
      const Vec vs[] = {x.to_r8(), u.to_r8(), v.to_r8(), w.to_r8()};
      Mat g8 = Mat::Identity(8, 8);
      g8.block(1, 1, 7, 7) = s.metric().matrix();
      double lhs = f.re * f.re + std::pow(vnorm(s, f.im), 2);
      return std::abs(lhs - gram_volume(vs, Metric(g8)));
    });
    r.check("tctc via the 8-dim expansion", [&](Sampler& rng) {
      oct::Octonion e = rand_oct(rng), u = rand_oct(rng), v = rand_oct(rng),
                    w = rand_oct(rng);
      auto tc = [&](const oct::Octonion& a, const oct::Octonion& b,
                    const oct::Octonion& cc) { return alg.triple_cross(a, b, cc); };
      double e2 = alg.inner(e, e);
      oct::Octonion lhs = tc(e, u, tc(e, v, w));
      oct::Octonion rhs =
          tc(u, v, w) * e2 - e * alg.inner(e, tc(u, v, w)) -
          tc(e, v, w) * alg.inner(e, u) - tc(e, w, u) * alg.inner(e, v) -
          tc(e, u, v) * alg.inner(e, w) -
          w * (e2 * alg.inner(u, v) - alg.inner(e, u) * alg.inner(e, v)) +
          v * (e2 * alg.inner(u, w) - alg.inner(e, u) * alg.inner(e, w)) +
          e * (alg.inner(u, v) * alg.inner(e, w) -
               alg.inner(u, w) * alg.inner(e, v));
      return alg.norm(lhs - rhs);
    });
    return r.finish();
  }

  fail("ParseError", "unknown dim-7 suite: " + name);
}

SuiteResult run_suite8(const std::string& name,
                       const spin7::CayleyStructure8& c, std::uint64_t seed,
                       int trials) {
  Runner r(name, seed, trials);
  const Metric& m = c.metric();
  const double eps = c.eps();

  if (name == "triple-cross") {
    r.check("tc1 orthogonality to arguments", [&](Sampler& rng) {
      Vec u = unit8(rng, c), v = unit8(rng, c), w = unit8(rng, c);
      Vec t = c.triple_cross(u, v, w);
      return std::max({std::abs(c.inner(t, u)), std::abs(c.inner(t, v)),
                       std::abs(c.inner(t, w))});
    });
    r.check("tc2 |uxvxw|^2 = |u^v^w|^2", [&](Sampler& rng) {
      Vec u = unit8(rng, c), v = unit8(rng, c), w = unit8(rng, c);
      Vec t = c.triple_cross(u, v, w);
      const Vec vs[] = {u, v, w};
      return std::abs(c.inner(t, t) - gram_volume(vs, m));
    });
    r.check("tc4 double triple cross", [&](Sampler& rng) {
      Vec u = unit8(rng, c), v = unit8(rng, c), w = unit8(rng, c);
      Vec lhs = c.triple_cross(u, v, c.triple_cross(u, v, w));
      double uv = c.inner(u, v);
      double gram = c.inner(u, u) * c.inner(v, v) - uv * uv;
      Vec rhs = (c.inner(v, v) * c.inner(u, w) - uv * c.inner(v, w)) * u +
                (c.inner(u, u) * c.inner(v, w) - uv * c.inner(u, w)) * v -
                gram * w;
      return c.norm(lhs - rhs);
    });
    r.check("tc6 exux(exvxw) = eps|e|^2 uxvxw", [&](Sampler& rng) {
      // e,u,v pairwise orthogonal; w orthogonal to e,u,v and exuxv.
      Vec e = unit8(rng, c);
      Vec u = rng.vector(8);
      u -= c.inner(e, u) * e;
      u /= c.norm(u);
      Vec v = rng.vector(8);
      v -= c.inner(e, v) * e + c.inner(u, v) * u;
      v /= c.norm(v);
      Vec t = c.triple_cross(e, u, v);
      Vec w = rng.vector(8);
      w -= c.inner(e, w) * e + c.inner(u, w) * u + c.inner(v, w) * v +
           c.inner(t, w) * t / c.inner(t, t);
      Vec lhs = c.triple_cross(e, u, c.triple_cross(e, v, w));
      return c.norm(lhs - eps * c.triple_cross(u, v, w));
    });
    r.check("tctc full expansion", [&](Sampler& rng) {
      Vec e = unit8(rng, c), u = unit8(rng, c), v = unit8(rng, c),
          w = unit8(rng, c);
      auto tc = [&](const Vec& a, const Vec& b, const Vec& d) {
        return c.triple_cross(a, b, d);
      };
      double e2 = c.inner(e, e);
      Vec lhs = tc(e, u, tc(e, v, w));
      Vec rhs = eps * e2 * tc(u, v, w) - eps * c.inner(e, tc(u, v, w)) * e -
                eps * c.inner(e, u) * tc(e, v, w) -
                eps * c.inner(e, v) * tc(e, w, u) -
                eps * c.inner(e, w) * tc(e, u, v) -
                (e2 * c.inner(u, v) - c.inner(e, u) * c.inner(e, v)) * w +
                (e2 * c.inner(u, w) - c.inner(e, u) * c.inner(e, w)) * v +
                (c.inner(u, v) * c.inner(e, w) -
                 c.inner(u, w) * c.inner(e, v)) *
                    e;
      return c.norm(lhs - rhs);
    });
    return r.finish();
  }

  if (name == "cayley-constants") {
    r.check("uvxy1 *(Phi^u*^v*) = omega_{u,v}", [&](Sampler& rng) {
      Vec u = unit8(rng, c), v = unit8(rng, c);
      AltForm lhs = c.star(wedge(c.Phi(), wedge(flat_form(m, u), flat_form(m, v))));
      return form_norm(lhs - c.pair_form(u, v), m);
    });
    r.check("uvxy1b *(Phi^omega_{u,v}) = 3u*^v* + 2omega_{u,v}",
            [&](Sampler& rng) {
              Vec u = unit8(rng, c), v = unit8(rng, c);
              AltForm om = c.pair_form(u, v);
              AltForm lhs = c.star(wedge(c.Phi(), om));
              AltForm rhs =
                  wedge(flat_form(m, u), flat_form(m, v)) * 3.0 + om * 2.0;
              return form_norm(lhs - rhs, m);
            });
    r.check("uvxy2 <omega_{u,v}, omega_{x,y}> constants (3,2)",
            [&](Sampler& rng) {
              Vec u = unit8(rng, c), v = unit8(rng, c), x = unit8(rng, c),
                  y = unit8(rng, c);
              double lhs = form_inner(c.pair_form(u, v), c.pair_form(x, y), m);
              double rhs = 3.0 * (c.inner(u, x) * c.inner(v, y) -
                                  c.inner(u, y) * c.inner(v, x)) +
                           2.0 * c.Phi_eval(u, v, x, y);
              return std::abs(lhs - rhs);
            });
    r.check("uvxy3 pair-wedge constants (6,7)", [&](Sampler& rng) {
      Vec u = unit8(rng, c), v = unit8(rng, c), x = unit8(rng, c),
          y = unit8(rng, c);
      AltForm top = wedge(wedge(c.pair_form(u, v), c.pair_form(x, y)), c.Phi());
      double lhs = form_inner(top, c.dvol(), m) / form_inner(c.dvol(), c.dvol(), m);
      double rhs = 6.0 * (c.inner(u, x) * c.inner(v, y) -
                          c.inner(u, y) * c.inner(v, x)) +
                   7.0 * c.Phi_eval(u, v, x, y);
      return std::abs(lhs - rhs);
    });
    r.check("gPhi = 6 q(gamma) + 7 Phi vs recovered metric", [&](Sampler& rng) {
      Vec u = unit8(rng, c), v = unit8(rng, c), x = unit8(rng, c),
          y = unit8(rng, c);
      AltForm top = wedge(wedge(c.pair_form(u, v), c.pair_form(x, y)), c.Phi());
      AltForm ww = wedge(c.Phi(), c.Phi());
      // dvol := Phi^Phi/14 per the trailing remark; matches c.dvol() up to eps
      double dv = form_inner(ww, c.dvol(), m) / form_inner(c.dvol(), c.dvol(), m) / 14.0;
      double gphi = form_inner(top, c.dvol(), m) /
                    form_inner(c.dvol(), c.dvol(), m) / dv;
      double rhs = 6.0 * (c.inner(u, x) * c.inner(v, y) -
                          c.inner(u, y) * c.inner(v, x)) +
                   7.0 * c.Phi_eval(u, v, x, y);
      return std::abs(gphi - rhs);
    });
    r.check("inner-lemma positivity and determinant identities",
            [&](Sampler& rng) {
              Vec u = unit8(rng, c), v = unit8(rng, c), w = unit8(rng, c);
              const Vec vs3[] = {u, v, w};
              double vol3 = gram_volume(vs3, m);
              if (vol3 < 1e-4) return 0.0;  // nearly dependent, resample-free
              auto g4 = [&](const Vec& a, const Vec& b, const Vec& x,
                            const Vec& y) {
                AltForm top = wedge(wedge(c.pair_form(a, b), c.pair_form(x, y)),
                                    c.Phi());
                return form_inner(top, c.dvol(), m) /
                       form_inner(c.dvol(), c.dvol(), m) / 6.0;
              };
              Eigen::Matrix2d L;
              L << g4(u, v, u, v), g4(u, v, u, w), g4(u, w, u, v),
                  g4(u, w, u, w);
              Eigen::Matrix3d A;
              A << g4(v, w, v, w), g4(v, w, w, u), g4(v, w, u, v),
                  g4(w, u, v, w), g4(w, u, w, u), g4(w, u, u, v),
                  g4(u, v, v, w), g4(u, v, w, u), g4(u, v, u, v);
              double worst = 0.0;
              if (Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(L)
                      .eigenvalues()
                      .minCoeff() <= 0)
                worst = 1.0;
              if (Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(
                      0.5 * (A + A.transpose()))
                      .eigenvalues()
                      .minCoeff() <= 0)
                worst = 1.0;
              worst = std::max(
                  worst, std::abs(L.determinant() - c.inner(u, u) * vol3));
              worst =
                  std::max(worst, std::abs(A.determinant() - vol3 * vol3));
              return worst;
            });
    return r.finish();
  }

  if (name == "spin") {
    r.check("mnorm |m(u,v)| = |u||v|", [&](Sampler& rng) {
      Vec u = unit8(rng, c), v = unit8(rng, c);
      return std::abs(spinrep::spinor_norm(c, spinrep::m_product(c, u, v)) -
                      1.0);
    });
    r.check("mnorm |gamma(e)s|^2 = |e|^2 |s|^2", [&](Sampler& rng) {
      Vec e = rng.vector(8);
      spinrep::SpinorPlus s(c, rng.gauss(), rng.form(8, 2));
      double lhs = std::pow(
          spinrep::spinor_norm(c, spinrep::gamma8(c, e, s)), 2);
      return std::abs(lhs -
                      c.inner(e, e) * std::pow(spinrep::spinor_norm(c, s), 2)) /
             std::max(1.0, c.inner(e, e));
    });
    r.check("gammaW1 adjoint <gamma(u)s, v*> = <s, m(u,v)>", [&](Sampler& rng) {
      Vec u = unit8(rng, c), v = unit8(rng, c);
      spinrep::SpinorPlus s(c, rng.gauss(), rng.form(8, 2));
      spinrep::SpinorMinus vstar{m.flat(v)};
      double lhs = spinrep::spinor_inner(c, spinrep::gamma8(c, u, s), vstar);
      double rhs = spinrep::spinor_inner(c, s, spinrep::m_product(c, u, v));
      return std::abs(lhs - rhs) / std::max(1.0, spinrep::spinor_norm(c, s));
    });
    r.check("gammaW2 gamma(u)*gamma(u) = |u|^2", [&](Sampler& rng) {
      Vec u = unit8(rng, c);
      spinrep::SpinorPlus s1(c, rng.gauss(), rng.form(8, 2));
      spinrep::SpinorPlus s2(c, rng.gauss(), rng.form(8, 2));
      double lhs = spinrep::spinor_inner(c, spinrep::gamma8(c, u, s1),
                                         spinrep::gamma8(c, u, s2));
      double rhs = spinrep::spinor_inner(c, s1, s2);
      double scale = std::max(1.0, spinrep::spinor_norm(c, s1) *
                                       spinrep::spinor_norm(c, s2));
      return std::abs(lhs - rhs) / scale;
    });
    r.check("gamma(e) m(e,v) = v for unit e", [&](Sampler& rng) {
      Vec e = unit8(rng, c), v = unit8(rng, c);
      spinrep::SpinorMinus out =
          spinrep::gamma8(c, e, spinrep::m_product(c, e, v));
      return (m.sharp(out.covector) - v).norm();
    });
    r.check("chi lemma Phi^2 + |chi|^2 = |x^u^v^w|^2", [&](Sampler& rng) {
      Vec x = unit8(rng, c), u = unit8(rng, c), v = unit8(rng, c),
          w = unit8(rng, c);
      spinrep::SpinorPlus t = spinrep::tau(c, x, u, v, w);
      const Vec vs[] = {x, u, v, w};
      double lhs = t.lambda() * t.lambda() +
                   std::pow(form_norm(t.omega(), m), 2);
      double worst = std::abs(lhs - gram_volume(vs, m));
      worst = std::max(worst,
                       std::abs(t.lambda() - c.Phi_eval(x, u, v, w)));
      return worst;
    });
    r.check("chi four-row agreement on orthogonal tuples", [&](Sampler& rng) {
      std::vector<Vec> on;
      while (on.size() < 4) {
        Vec cand = rng.vector(8);
        for (const Vec& b : on) cand -= c.inner(b, cand) * b;
        if (c.norm(cand) < 1e-3) continue;
        on.push_back(cand / c.norm(cand));
      }
      const Vec &u = on[0], &v = on[1], &w = on[2], &x = on[3];
      auto mrow = [&](const Vec& a, const Vec& b, double sign) {
        spinrep::SpinorPlus p = spinrep::m_product(c, a, b);
        return std::pair<double, AltForm>(sign * p.lambda(),
                                          p.omega() * sign);
      };
      auto r1 = mrow(c.triple_cross(u, v, w), x, 1.0);
      auto r2 = mrow(c.triple_cross(v, w, x), u, -1.0);
      auto r3 = mrow(c.triple_cross(w, x, u), v, 1.0);
      auto r4 = mrow(c.triple_cross(x, u, v), w, -1.0);
      double worst = 0.0;
      for (const auto* p : {&r2, &r3, &r4}) {
        worst = std::max(worst, std::abs(r1.first - p->first));
        worst = std::max(worst, form_norm(r1.second - p->second, m));
      }
      return worst;
    });
    return r.finish();
  }

  if (name == "spin7-projectors") {
    r.check("pi7 idempotent and orthogonal split", [&](Sampler& rng) {
      AltForm w = rng.form(8, 2);
      w *= 1.0 / w.sup_norm();
      DecompReport rep = spin7::decompose2_8(c, w);
      const AltForm &w7 = rep.part("7"), &w21 = rep.part("21");
      DecompReport again = spin7::decompose2_8(c, w7);
      double worst = form_norm(again.part("7") - w7, m);
      worst = std::max(worst, std::abs(form_inner(w7, w21, m)));
      worst = std::max(worst, rep.recompose_residual);
      worst = std::max(worst, rep.residual("7"));
      worst = std::max(worst, rep.residual("21"));
      return worst;
    });
    r.check("instanton residual matches the 21-part", [&](Sampler& rng) {
      AltForm w = rng.form(8, 2);
      w *= 1.0 / w.sup_norm();
      spin7::InstantonResidual res = spin7::instanton_residual(c, w);
      DecompReport rep = spin7::decompose2_8(c, w);
      return form_norm(res.pi7 - rep.part("7"), m);
    });
    r.check("pair form lands in Lambda^2_7 shifted family", [&](Sampler& rng) {
      // u*^v* - iota(u)iota(v)Phi = u*^v* + omega_{u,v} is in Lambda^2_7.
      Vec u = unit8(rng, c), v = unit8(rng, c);
      AltForm x = wedge(flat_form(m, u), flat_form(m, v)) + c.pair_form(u, v);
      DecompReport rep = spin7::decompose2_8(c, x);
      return form_norm(rep.part("21"), m);
    });
    return r.finish();
  }

  fail("ParseError", "unknown dim-8 suite: " + name);
}

std::vector<std::string> suite_names(int dim) {
  if (dim == 7)
    return {"cross-axioms", "brackets", "g2-projectors", "octonion-norm",
            "octonion-triple"};
  if (dim == 8)
    return {"triple-cross", "cayley-constants", "spin", "spin7-projectors"};
  return {};
}

}  // namespace verify
}  // namespace calibra
