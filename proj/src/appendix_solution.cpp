#include "nvres/appendix_solution.hpp"

#include <cmath>
#include <stdexcept>

namespace nvres {

namespace {

constexpr cplx I{0.0, 1.0};

// Antiderivatives of e^{-g s} cos(w s) and e^{-g s} sin(w s).
double ec(double g, double w, double t) {
    return std::exp(-g * t) * (w * std::sin(w * t) - g * std::cos(w * t)) / (g * g + w * w);
}
double es(double g, double w, double t) {
    return -std::exp(-g * t) * (g * std::sin(w * t) + w * std::cos(w * t)) / (g * g + w * w);
}

// Antiderivatives of e^{-g s} (P cos(b s) + Q sin(b s)) * cos(a s) / sin(a s).
cplx feed_c(double g, double a, double b, cplx P, cplx Q, double t) {
    return 0.5 * P * (ec(g, a - b, t) + ec(g, a + b, t)) +
           0.5 * Q * (es(g, a + b, t) - es(g, a - b, t));
}
cplx feed_s(double g, double a, double b, cplx P, cplx Q, double t) {
    return 0.5 * P * (es(g, a - b, t) + es(g, a + b, t)) +
           0.5 * Q * (ec(g, a - b, t) - ec(g, a + b, t));
}

// 1-based element access.
struct View {
    const Mat9& m;
    cplx operator()(int i, int j) const {
        return m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    }
};

}  // namespace

Mat9 appendix_eval(const Mat9& rho0, double al, double be, const DecayRates& rates, double t) {
    const double gd = rates.gamma_d;
    const double ge = rates.gamma_e;
    if (gd < 0.0 || ge < 0.0) throw std::domain_error("appendix_eval: decay rates must be >= 0");
    if (!std::isfinite(al) || !std::isfinite(be) || !std::isfinite(t))
        throw std::domain_error("appendix_eval: non-finite input");

    const View r{rho0};
    const double cb = std::cos(be * t), sb = std::sin(be * t);
    const double ca = std::cos(al * t), sa = std::sin(al * t);
    const double c2b = std::cos(2 * be * t), s2b = std::sin(2 * be * t);
    const double c2a = std::cos(2 * al * t), s2a = std::sin(2 * al * t);
    const auto ex = [](double x) { return std::exp(x); };

    Mat9 out;
    const auto put = [&out](int i, int j, cplx v) {
        out(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
    };

    // ---- bare exponentials ----
    put(9, 9, r(9, 9) * ex(-2 * ge * t));
    put(9, 7, r(9, 7) * ex(-1.5 * ge * t));
    put(9, 3, r(9, 3) * ex(-1.5 * ge * t));
    put(9, 5, r(9, 5) * ex(-(gd + ge) * t));
    put(9, 1, r(9, 1) * ex(-ge * t));
    put(7, 9, r(7, 9) * ex(-1.5 * ge * t));
    put(3, 9, r(3, 9) * ex(-1.5 * ge * t));
    put(5, 9, r(5, 9) * ex(-(gd + ge) * t));
    put(1, 9, r(1, 9) * ex(-ge * t));
    put(7, 5, r(7, 5) * ex(-(2 * gd + ge) / 2 * t));
    put(5, 7, r(5, 7) * ex(-(2 * gd + ge) / 2 * t));
    put(7, 3, r(7, 3) * ex(-ge * t));
    put(3, 7, r(3, 7) * ex(-ge * t));
    put(5, 5, r(5, 5) * ex(-2 * gd * t));
    put(5, 1, r(5, 1) * ex(-gd * t));
    put(1, 5, r(1, 5) * ex(-gd * t));
    put(5, 3, r(5, 3) * ex(-(2 * gd + ge) / 2 * t));
    put(3, 5, r(3, 5) * ex(-(gd + ge / 2) * t));

    // ---- beta-rotating pairs ----
    put(9, 8, ex(-(gd + 3 * ge) / 2 * t) * (r(9, 8) * cb - I * r(9, 6) * sb));
    put(9, 6, ex(-(gd + 3 * ge) / 2 * t) * (r(9, 6) * cb - I * r(9, 8) * sb));
    put(8, 9, ex(-(gd + 3 * ge) / 2 * t) * (r(8, 9) * cb + I * r(6, 9) * sb));
    put(6, 9, ex(-(gd + 3 * ge) / 2 * t) * (r(6, 9) * cb + I * r(8, 9) * sb));
    put(8, 7, ex(-(gd / 2 + ge) * t) * (r(8, 7) * cb + I * r(6, 7) * sb));
    put(6, 7, ex(-(gd / 2 + ge) * t) * (r(6, 7) * cb + I * r(8, 7) * sb));
    put(7, 8, ex(-(gd + 2 * ge) / 2 * t) * (r(7, 8) * cb - I * r(7, 6) * sb));
    put(7, 6, ex(-(gd + 2 * ge) / 2 * t) * (r(7, 6) * cb - I * r(7, 8) * sb));
    put(8, 5, ex(-(3 * gd + ge) / 2 * t) * (r(8, 5) * cb + I * r(6, 5) * sb));
    put(6, 5, ex(-(3 * gd + ge) / 2 * t) * (r(6, 5) * cb + I * r(8, 5) * sb));
    put(5, 8, ex(-(3 * gd + ge) / 2 * t) * (r(5, 8) * cb - I * r(5, 6) * sb));
    put(5, 6, ex(-(3 * gd + ge) / 2 * t) * (r(5, 6) * cb - I * r(5, 8) * sb));
    put(8, 3, ex(-(gd + 2 * ge) / 2 * t) * (r(8, 3) * cb + I * r(6, 3) * sb));
    put(6, 3, ex(-(gd + 2 * ge) / 2 * t) * (r(6, 3) * cb + I * r(8, 3) * sb));
    put(3, 8, ex(-(gd / 2 + ge) * t) * (r(3, 8) * cb - I * r(3, 6) * sb));
    put(3, 6, ex(-(gd / 2 + ge) * t) * (r(3, 6) * cb - I * r(3, 8) * sb));
    put(8, 1, ex(-(gd + ge) / 2 * t) * (r(8, 1) * cb + I * r(6, 1) * sb));
    put(6, 1, ex(-(gd + ge) / 2 * t) * (r(6, 1) * cb + I * r(8, 1) * sb));
    put(1, 8, ex(-(gd + ge) / 2 * t) * (r(1, 8) * cb - I * r(1, 6) * sb));
    put(1, 6, ex(-(gd + ge) / 2 * t) * (r(1, 6) * cb - I * r(1, 8) * sb));

    // ---- alpha-rotating pairs ----
    put(9, 4, ex(-(gd / 2 + ge) * t) * (r(9, 4) * ca - I * r(9, 2) * sa));
    put(9, 2, ex(-(gd / 2 + ge) * t) * (r(9, 2) * ca - I * r(9, 4) * sa));
    put(4, 9, ex(-(gd + 2 * ge) / 2 * t) * (r(4, 9) * ca + I * r(2, 9) * sa));
    put(2, 9, ex(-(gd / 2 + ge) * t) * (r(2, 9) * ca + I * r(4, 9) * sa));
    put(5, 4, ex(-1.5 * gd * t) * (r(5, 4) * ca - I * r(5, 2) * sa));
    put(5, 2, ex(-1.5 * gd * t) * (r(5, 2) * ca - I * r(5, 4) * sa));
    put(4, 5, ex(-1.5 * gd * t) * (r(4, 5) * ca + I * r(2, 5) * sa));
    put(2, 5, ex(-1.5 * gd * t) * (r(2, 5) * ca + I * r(4, 5) * sa));

    // ---- 66/88/68/86 block ----
    put(8, 8, 0.5 *
                  (r(6, 6) * (1 - c2b) + r(8, 8) * (1 + c2b) + I * r(6, 8) * s2b -
                   I * r(8, 6) * s2b) *
                  ex(-(gd + ge) * t));
    put(6, 6, 0.5 *
                  (r(8, 8) * (1 - c2b) + r(6, 6) * (1 + c2b) - I * r(6, 8) * s2b +
                   I * r(8, 6) * s2b) *
                  ex(-(gd + ge) * t));
    put(8, 6, 0.5 *
                  (r(6, 8) * (1 - c2b) + r(8, 6) * (1 + c2b) - I * r(8, 8) * s2b +
                   I * r(6, 6) * s2b) *
                  ex(-(gd + ge) * t));
    put(6, 8, 0.5 *
                  (r(8, 6) * (1 - c2b) + r(6, 8) * (1 + c2b) + I * r(8, 8) * s2b -
                   I * r(6, 6) * s2b) *
                  ex(-(gd + ge) * t));

    // ---- alpha x beta mixed quadruples ----
    put(8, 4, ex(-(2 * gd + ge) / 2 * t) *
                  (sa * (-I * r(8, 2) * cb + r(6, 2) * sb) + ca * (r(8, 4) * cb + I * r(6, 4) * sb)));
    put(8, 2, ex(-(2 * gd + ge) / 2 * t) *
                  (ca * (r(8, 2) * cb + I * r(6, 2) * sb) + sa * (-I * r(8, 4) * cb + r(6, 4) * sb)));
    put(6, 4, ex(-(2 * gd + ge) / 2 * t) *
                  (ca * (r(6, 4) * cb + I * r(8, 4) * sb) + sa * (-I * r(6, 2) * cb + r(8, 2) * sb)));
    put(6, 2, ex(-(2 * gd + ge) / 2 * t) *
                  (sa * (-I * r(6, 4) * cb + r(8, 4) * sb) + ca * (r(6, 2) * cb + I * r(8, 2) * sb)));
    put(4, 8, ex(-(2 * gd + ge) / 2 * t) *
                  (sa * (I * r(2, 8) * cb + r(2, 6) * sb) + ca * (r(4, 8) * cb - I * r(4, 6) * sb)));
    put(4, 6, ex(-(2 * gd + ge) / 2 * t) *
                  (ca * (r(4, 6) * cb - I * r(4, 8) * sb) + sa * (I * r(2, 6) * cb + r(2, 8) * sb)));
    put(2, 8, ex(-(ge / 2 + gd) * t) *
                  (ca * (r(2, 8) * cb - I * r(2, 6) * sb) + sa * (I * r(4, 8) * cb + r(4, 6) * sb)));
    put(2, 6, ex(-(ge / 2 + gd) * t) *
                  (sa * (I * r(4, 6) * cb + r(4, 8) * sb) + ca * (r(2, 6) * cb - I * r(2, 8) * sb)));

    // ---- populations 77 / 33 (fed by 99 and the 66/88 oscillation) ----
    if (gd > 0.0 || be != 0.0) {
        const double d4b = 4 * be * be + gd * gd;
        const cplx x77 = gd > 0.0 ? (gd * gd * (r(6, 6) - r(8, 8)) / d4b +
                                     2.0 * I * be * gd * (r(8, 6) - r(6, 8)) / d4b)
                                  : cplx{0.0};
        const cplx osc = gd > 0.0
                             ? (0.5 * gd * (r(6, 6) - r(8, 8)) * (2 * be * s2b - gd * c2b) / d4b -
                                0.5 * I * gd * (r(8, 6) - r(6, 8)) * (2 * be * c2b + gd * s2b) / d4b) *
                                   ex(-(gd + ge) * t)
                             : cplx{0.0};
        put(7, 7, 0.5 * (2.0 * r(7, 7) + r(6, 6) + r(8, 8) + 2.0 * r(9, 9) - x77) * ex(-ge * t) -
                      osc - 0.5 * (r(6, 6) + r(8, 8)) * ex(-(ge + gd) * t) -
                      r(9, 9) * ex(-2 * ge * t));
        put(3, 3, 0.5 * (2.0 * r(3, 3) + r(6, 6) + r(8, 8) + 2.0 * r(9, 9) + x77) * ex(-ge * t) +
                      osc - 0.5 * (r(6, 6) + r(8, 8)) * ex(-(ge + gd) * t) -
                      r(9, 9) * ex(-2 * ge * t));
    } else {
        // gd = 0 and beta = 0: no gd feed, only the 99 -> 77/33 decay chain
        put(7, 7, (r(7, 7) + r(9, 9)) * ex(-ge * t) - r(9, 9) * ex(-2 * ge * t));
        put(3, 3, (r(3, 3) + r(9, 9)) * ex(-ge * t) - r(9, 9) * ex(-2 * ge * t));
    }

    // ---- F-driven pairs rotating at alpha, decay (gd+ge)/2 ----
    // e^{(gd+ge)t/2} F(t) = gd e^{-gd t}(Pd cb + Qd sb) + ge e^{-ge t}(Pe cb + Qe sb)
    struct FeedArgs {
        cplx pd, qd, pe, qe;
    };
    const auto ic = [&](const FeedArgs& f, double tt) {
        cplx v = 0.0;
        if (gd > 0.0) v += gd * feed_c(gd, al, be, f.pd, f.qd, tt);
        if (ge > 0.0) v += ge * feed_c(ge, al, be, f.pe, f.qe, tt);
        return v;
    };
    const auto is = [&](const FeedArgs& f, double tt) {
        cplx v = 0.0;
        if (gd > 0.0) v += gd * feed_s(gd, al, be, f.pd, f.qd, tt);
        if (ge > 0.0) v += ge * feed_s(ge, al, be, f.pe, f.qe, tt);
        return v;
    };
    const double eh = ex(-(gd + ge) / 2 * t);

    {  // (74, 72): driven by gd*rho85(t) + ge*rho96(t)
        const FeedArgs f{r(8, 5), I * r(6, 5), r(9, 6), -I * r(9, 8)};
        const cplx g74 = r(7, 4) - ic(f, 0.0);
        const cplx g72 = r(7, 2) - I * is(f, 0.0);
        put(7, 4, eh * (g74 * ca - I * g72 * sa + ca * ic(f, t) + sa * is(f, t)));
        put(7, 2, eh * (g72 * ca - I * g74 * sa + I * (ca * is(f, t) - sa * ic(f, t))));
    }
    {  // (47, 27): driven by gd*rho58(t) + ge*rho69(t)
        const FeedArgs f{r(5, 8), -I * r(5, 6), r(6, 9), I * r(8, 9)};
        const cplx g47 = r(4, 7) - ic(f, 0.0);
        const cplx g27 = r(2, 7) + I * is(f, 0.0);
        put(4, 7, eh * (g47 * ca + I * g27 * sa + ca * ic(f, t) + sa * is(f, t)));
        put(2, 7, eh * (g27 * ca + I * g47 * sa - I * (ca * is(f, t) - sa * ic(f, t))));
    }
    {  // (23, 43): driven by gd*rho56(t) + ge*rho89(t)
        const FeedArgs f{r(5, 6), -I * r(5, 8), r(8, 9), I * r(6, 9)};
        const cplx g23 = r(2, 3) - ic(f, 0.0);
        const cplx g43 = r(4, 3) + I * is(f, 0.0);
        put(2, 3, eh * (g23 * ca + I * g43 * sa + ca * ic(f, t) + sa * is(f, t)));
        put(4, 3, eh * (g43 * ca + I * g23 * sa - I * ca * is(f, t) + I * sa * ic(f, t)));
    }
    {  // (32, 34): driven by gd*rho65(t) + ge*rho98(t)
        const FeedArgs f{r(6, 5), I * r(8, 5), r(9, 8), -I * r(9, 6)};
        const cplx g32 = r(3, 2) - ic(f, 0.0);
        const cplx g34 = r(3, 4) - I * is(f, 0.0);
        put(3, 2, eh * (g32 * ca - I * g34 * sa + ca * ic(f, t) + sa * is(f, t)));
        put(3, 4, eh * (g34 * ca - I * g32 * sa + I * ca * is(f, t) - I * sa * ic(f, t)));
    }

    // ---- 22/44/24/42 block (fed by gd*rho55 + ge*rho66/88) ----
    {
        const cplx d0 = r(8, 8) - r(6, 6);
        const cplx e0 = r(6, 8) - r(8, 6);
        const auto i88c = [&](double tt) { return feed_c(ge, 2 * al, 2 * be, d0, I * e0, tt); };
        const auto i88s = [&](double tt) { return feed_s(ge, 2 * al, 2 * be, d0, I * e0, tt); };
        const bool fed = ge > 0.0;
        const cplx gx = (r(2, 2) - r(4, 4)) - (fed ? ge * i88c(0.0) : cplx{0.0});
        const cplx gy = (r(2, 4) - r(4, 2)) - (fed ? I * ge * i88s(0.0) : cplx{0.0});
        const cplx ssum = 0.5 * (r(2, 2) + r(4, 4) + 2.0 * r(5, 5) + r(8, 8) + r(6, 6));
        const cplx base = ssum * ex(-gd * t) - r(5, 5) * ex(-2 * gd * t) -
                          0.5 * (r(8, 8) + r(6, 6)) * ex(-(gd + ge) * t);
        cplx xt = ex(-gd * t) * (gx * c2a - I * gy * s2a);
        cplx wt = ex(-gd * t) * (gy * c2a - I * gx * s2a);
        if (fed) {
            xt += ge * ex(-gd * t) * (c2a * i88c(t) + s2a * i88s(t));
            wt += I * ge * ex(-gd * t) * (i88s(t) * c2a - i88c(t) * s2a);
        }
        put(2, 2, base + 0.5 * xt);
        put(4, 4, base - 0.5 * xt);
        put(2, 4, 0.5 * (r(2, 4) + r(4, 2)) * ex(-gd * t) + 0.5 * wt);
        put(4, 2, 0.5 * (r(2, 4) + r(4, 2)) * ex(-gd * t) - 0.5 * wt);
    }

    // ---- (41, 21) and (14, 12): decay gd/2, alpha rotation, two-rate feeds ----
    // A' = -(gd/2)A + sgn*i*al*B + FA, B' = -(gd/2)B + sgn*i*al*A + FB, with
    //   e^{gd s/2} FA = gd e^{-gd s}(X ca_s - sgn i Y sa_s) + ge e^{-ge s}(PeA cb_s + QeA sb_s)
    //   e^{gd s/2} FB = gd e^{-gd s}(Y ca_s - sgn i X sa_s) + ge e^{-ge s}(PeB cb_s + QeB sb_s)
    // In the u+- = A +- B combinations the gd parts collapse to single
    // 2*alpha harmonics; the otherwise-degenerate constant terms cancel.
    const auto pair_half = [&](cplx a0, cplx b0, cplx x, cplx y, cplx pea, cplx qea, cplx peb,
                               cplx qeb, double sgn) {
        const auto up_int = [&](double tt) {
            cplx v = 0.0;
            if (gd > 0.0) v += gd * (x + y) * (ec(gd, 2 * al, tt) - sgn * I * es(gd, 2 * al, tt));
            if (ge > 0.0)
                v += ge * (feed_c(ge, al, be, pea + peb, qea + qeb, tt) -
                           sgn * I * feed_s(ge, al, be, pea + peb, qea + qeb, tt));
            return v;
        };
        const auto um_int = [&](double tt) {
            cplx v = 0.0;
            if (gd > 0.0) v += gd * (x - y) * (ec(gd, 2 * al, tt) + sgn * I * es(gd, 2 * al, tt));
            if (ge > 0.0)
                v += ge * (feed_c(ge, al, be, pea - peb, qea - qeb, tt) +
                           sgn * I * feed_s(ge, al, be, pea - peb, qea - qeb, tt));
            return v;
        };
        const auto rot = [&](double s) { return cplx{std::cos(al * t), s * std::sin(al * t)}; };
        const cplx up0 = a0 + b0 - up_int(0.0);
        const cplx um0 = a0 - b0 - um_int(0.0);
        const double eg = ex(-gd / 2 * t);
        const cplx up = eg * rot(sgn) * (up0 + up_int(t));
        const cplx um = eg * rot(-sgn) * (um0 + um_int(t));
        return std::make_pair(0.5 * (up + um), 0.5 * (up - um));
    };

    {  // (41, 21): FA from gd*rho52 + ge*rho63, FB from gd*rho54 + ge*rho87
        const auto [r41, r21] = pair_half(r(4, 1), r(2, 1), r(5, 2), r(5, 4), r(6, 3),
                                          I * r(8, 3), r(8, 7), I * r(6, 7), +1.0);
        put(4, 1, r41);
        put(2, 1, r21);
    }
    {  // (14, 12): FA from gd*rho25 + ge*rho36, FB from gd*rho45 + ge*rho78
        const auto [r14, r12] = pair_half(r(1, 4), r(1, 2), r(2, 5), r(4, 5), r(3, 6),
                                          -I * r(3, 8), r(7, 8), -I * r(7, 6), -1.0);
        put(1, 4, r14);
        put(1, 2, r12);
    }

    // ---- fed, non-rotating: 71, 31, 17, 13 (decay ge/2) ----
    // d rho/dt = -(ge/2) rho + gd * rho_quad(t) + ge * rho_simple(t), where the
    // quad source decays at (2 gd + ge)/2 and the simple one at 3 ge/2.
    const auto fed_nonrot = [&](cplx a0, cplx pc, cplx qc, cplx ps, cplx qs, cplx rsimple) {
        const auto ad = [&](double tt) {
            return feed_c(gd, al, be, pc, qc, tt) + feed_s(gd, al, be, ps, qs, tt);
        };
        cplx part0 = -rsimple;  // antiderivative of ge * rsimple e^{-ge s} at 0 (any ge)
        cplx partt = -rsimple * ex(-ge * t);
        if (gd > 0.0) {
            part0 += gd * ad(0.0);
            partt += gd * ad(t);
        }
        const cplx ga = a0 - part0;
        return ga * ex(-ge / 2 * t) + ex(-ge / 2 * t) * partt;
    };
    put(7, 1, fed_nonrot(r(7, 1), r(8, 2), I * r(6, 2), -I * r(8, 4), r(6, 4), r(9, 3)));
    put(3, 1, fed_nonrot(r(3, 1), r(6, 4), I * r(8, 4), -I * r(6, 2), r(8, 2), r(9, 7)));
    put(1, 7, fed_nonrot(r(1, 7), r(2, 8), -I * r(2, 6), I * r(4, 8), r(4, 6), r(3, 9)));
    put(1, 3, fed_nonrot(r(1, 3), r(4, 6), -I * r(4, 8), I * r(2, 6), r(2, 8), r(7, 9)));

    // ---- ground population from trace bookkeeping ----
    put(1, 1, (r(1, 1) + r(2, 2) + r(3, 3) + r(4, 4) + r(5, 5) + r(6, 6) + r(7, 7) + r(8, 8) +
               r(9, 9)) -
                  (r(2, 2) + r(4, 4) + 2.0 * r(5, 5) + r(8, 8) + r(6, 6)) * ex(-gd * t) +
                  r(5, 5) * ex(-2 * gd * t) + (r(6, 6) + r(8, 8)) * ex(-(gd + ge) * t) -
                  (r(3, 3) + r(7, 7) + 2.0 * r(9, 9) + r(8, 8) + r(6, 6)) * ex(-ge * t) +
                  r(9, 9) * ex(-2 * ge * t));
    return out;
}

namespace {

constexpr TranscriptionNote kNotes[] = {
    {"rho_97", "decays as \"rho e^{-(3/2) gamma_e t}\" with the subscript dropped",
     "rho_97(0) e^{-(3/2) gamma_e t}; confirmed against the integrator"},
    {"rho_29, rho_49", "printed with -i on the cross terms",
     "+i (Hermitian conjugates of rho_92/rho_94); confirmed against the integrator"},
    {"rho_33", "leading population printed as 2 rho_77",
     "2 rho_33 (required by the t = 0 limit); confirmed against the integrator"},
    {"rho_48", "contains the nonlinear product \"rho_26 rho_28 sin(beta t)\"",
     "rho_26 sin(beta t) (Hermitian conjugate of rho_84)"},
    {"rho_26", "second bracket multiplied by cos(beta t)",
     "cos(alpha t) (Hermitian conjugate of rho_62)"},
    {"rho_22/44/24/42", "feed integrals and gamma_x/gamma_y corrections carry a gamma_d prefactor; "
                        "rho_24/rho_42 lack the 1/2 on the homogeneous-plus-integral brace and "
                        "print cos(alpha t) where cos(2 alpha t) belongs",
     "the feed is gamma_e (rho_88 - rho_66)(t), so gamma_e prefactors throughout, the brace "
     "halved, 2 alpha harmonics; confirmed against the integrator"},
    {"gamma_72/74/27/47", "gamma_e terms printed with (alpha +/- beta)^2 + gamma_d^2 denominators",
     "gamma_e^2 denominators; all integration constants are fixed by the t = 0 reduction (the "
     "printed constants are that reduction, with slips)"},
    {"gamma_31, gamma_17", "omit the +rho_97 / +rho_39 terms present in their mirror images "
                           "gamma_71, gamma_13",
     "constants fixed by the t = 0 reduction, which restores the terms"},
    {"rho_71/31/17/13 integrals", "scattered trig-argument slips (e.g. \"gamma_d cos(alpha t)\" for "
                                  "\"gamma_d cos((alpha-beta) t)\", cos where sin belongs)",
     "the antiderivatives are evaluated from the exact primitives of e^{-g s} cos/sin, which the "
     "healthy printed expressions equal term by term"},
    {"V-hat", "the beta bracket is printed with the same operator twice (non-Hermitian as printed)",
     "-beta (R23 x R32 + R32 x R23), the Hermitian form consistent with the amplitude equations"},
    {"R_32 basis listing", "labelled |2><1|", "the printed matrix |3><2| is used"},
};

}  // namespace

std::span<const TranscriptionNote> transcription_notes() { return kNotes; }

}  // namespace nvres
