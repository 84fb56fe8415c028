#include "mixmom/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "mixmom/dd.hpp"

namespace mixmom {

namespace {

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------- tanh-sinh

struct TSNode {
    double y;  // abscissa in (0,1), distance from the nearer endpoint
    double w;
};

// nodes for level l have step h = 2^-l; we cache positive-k nodes per level
const std::vector<TSNode>& ts_level(int level) {
    static std::vector<std::vector<TSNode>> cache;
    if ((int)cache.size() <= level) cache.resize(level + 1);
    auto& lv = cache[level];
    if (!lv.empty()) return lv;
    double h = std::ldexp(1.0, -level);
    // level 0 holds every node; higher levels only the odd multiples of h
    for (long k = (level == 0) ? 0 : 1;; k += (level == 0) ? 1 : 2) {
        double t = k * h;
        double u = kPi / 2.0 * std::sinh(t);
        double x = std::tanh(u);              // in [0,1)
        double dist = 1.0 / (std::exp(u) * std::cosh(u));  // 1 - x, stably
        double w = kPi / 2.0 * std::cosh(t) / (std::cosh(u) * std::cosh(u));
        if (dist < 1e-17 || w < 1e-300) break;
        (void)x;
        lv.push_back({dist, w});  // distance-to-endpoint form, exact near the ends
        if (k > 100000) break;
    }
    return lv;
}

// evaluate f over (a,b) finite with tanh-sinh; f gets the abscissa expressed
// as absolute position, but near the ends we compute the position from the
// distance to the endpoint to preserve accuracy of endpoint singularities.
NumValue tanh_sinh_finite(const integrand& f, double a, double b, const EvalConfig& cfg) {
    double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    auto eval_pair = [&](double dist, kahan_csum& acc, double w) {
        // x = c ± hw*(1-dist)
        double xp = b - hw * dist;
        double xm = a + hw * dist;
        cplx fp = (xp > a && xp < b) ? f(xp) : cplx(0.0);
        cplx fm = (xm > a && xm < b && dist != 0.0) ? f(xm) : cplx(0.0);
        if (std::isfinite(fp.real()) && std::isfinite(fp.imag())) acc.add(w * fp);
        if (dist != 0.0 && std::isfinite(fm.real()) && std::isfinite(fm.imag())) acc.add(w * fm);
    };

    kahan_csum acc;
    {  // level 0
        const auto& lv = ts_level(0);
        for (size_t i = 0; i < lv.size(); ++i) {
            double w = lv[i].w;
            if (i == 0) {
                cplx f0 = f(c);
                if (std::isfinite(f0.real()) && std::isfinite(f0.imag())) acc.add(w * f0);
            } else {
                eval_pair(lv[i].y, acc, w);
            }
        }
    }
    double h = 1.0;
    cplx prev = acc.value() * h * hw;
    double err = std::abs(prev);
    cplx best = prev;
    for (int level = 1; level <= cfg.quad_levels; ++level) {
        const auto& lv = ts_level(level);
        for (const auto& nd : lv) eval_pair(nd.y, acc, nd.w);
        h = std::ldexp(1.0, -level);
        cplx cur = acc.value() * h * hw;
        err = std::abs(cur - prev);
        prev = cur;
        best = cur;
        double scale = std::max(std::abs(cur), 1e-300);
        if (err < cfg.target_rel_err * scale * 0.1 && level >= 5) {
            return {cur, err + scale * 1e-15};
        }
    }
    return {best, err + std::abs(best) * 1e-15};
}

// map (a, inf) -> (0,1) via x = a + t/(1-t), weight 1/(1-t)^2
NumValue tanh_sinh_to_inf(const integrand& f, double a, const EvalConfig& cfg) {
    auto g = [&](double t) -> cplx {
        double om = 1.0 - t;
        double x = a + t / om;
        double w = 1.0 / (om * om);
        if (!std::isfinite(x) || !std::isfinite(w)) return cplx(0.0);
        return w * f(x);
    };
    return tanh_sinh_finite(g, 0.0, 1.0, cfg);
}

// ------------------------------------------------------------ Gauss-Kronrod

const double kGK15X[8] = {0.0,
                          0.2077849550078985,
                          0.4058451513773972,
                          0.5860872354676911,
                          0.7415311855993944,
                          0.8648644233597691,
                          0.9491079123427585,
                          0.9914553711208126};
const double kGK15WK[8] = {0.2094821410847278, 0.2044329400752989, 0.1903505780647854,
                           0.1690047266392679, 0.1406532597155259, 0.1047900103222502,
                           0.0630920926299786, 0.0229353220105292};
const double kG7W[4] = {0.4179591836734694, 0.3818300505051189, 0.2797053914892767,
                        0.1294849661688697};

struct GKOut {
    cplx k15;
    double err;
    double fmax;
};

GKOut gk15_core(const integrand& f, double a, double b) {
    double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    double fmax = 0.0;
    cplx f0 = f(c);
    cplx k(0, 0), g(0, 0);
    k += kGK15WK[0] * f0;
    g += kG7W[0] * f0;
    fmax = std::abs(f0);
    for (int i = 1; i < 8; ++i) {
        cplx fp = f(c + hw * kGK15X[i]);
        cplx fm = f(c - hw * kGK15X[i]);
        k += kGK15WK[i] * (fp + fm);
        if (i % 2 == 0) g += kG7W[i / 2] * (fp + fm);
        fmax = std::max({fmax, std::abs(fp), std::abs(fm)});
    }
    cplx k15 = k * hw;
    cplx g7 = g * hw;
    double diff = std::abs(k15 - g7);
    double err = diff;
    if (diff > 0) {
        double scale = std::abs(k15) + 1e-300;
        double r = std::min(1.0, std::pow(200.0 * diff / scale, 1.5) + 1e-18);
        err = std::min(diff, scale * r);
        err = std::max(err, std::abs(k15) * 1e-16);
    }
    return {k15, err, fmax};
}

NumValue adaptive_gk(const integrand& f, double a, double b, const EvalConfig& cfg) {
    struct Piece {
        double a, b, err;
        cplx val;
        bool operator<(const Piece& o) const { return err < o.err; }
    };
    std::priority_queue<Piece> heap;
    GKOut g0 = gk15_core(f, a, b);
    heap.push({a, b, g0.err, g0.k15});
    cplx total = g0.k15;
    double toterr = g0.err;
    long evals = 15;
    while (toterr > cfg.target_rel_err * std::max(std::abs(total), 1e-300) &&
           evals < cfg.max_terms) {
        Piece top = heap.top();
        if (top.err < 1e-18 * std::abs(total) || top.b - top.a < 1e-15 * std::abs(top.b - top.a + 1.0))
            break;
        heap.pop();
        double m = 0.5 * (top.a + top.b);
        GKOut gl = gk15_core(f, top.a, m);
        GKOut gr = gk15_core(f, m, top.b);
        total += gl.k15 + gr.k15 - top.val;
        toterr += gl.err + gr.err - top.err;
        heap.push({top.a, m, gl.err, gl.k15});
        heap.push({m, top.b, gr.err, gr.k15});
        evals += 30;
        if (toterr < 0) {  // recompute drift
            toterr = 0;
            auto tmp = heap;
            while (!tmp.empty()) {
                toterr += tmp.top().err;
                tmp.pop();
            }
        }
    }
    return {total, std::max(toterr, std::abs(total) * 1e-15)};
}

}  // namespace

NumValue gk15(const integrand& f, double a, double b) {
    GKOut g = gk15_core(f, a, b);
    return {g.k15, g.err};
}

NumValue quad_oscillatory_segmented(const integrand& f, const std::vector<double>& cuts,
                                    const EvalConfig& cfg) {
    if (cuts.size() < 2) throw domain_error("quad_oscillatory_segmented: need >= 2 cuts");
    // integrate each segment, then accelerate the (typically alternating)
    // series of segment integrals by iterated averaging (Euler transform)
    std::vector<cplx> seg;
    double segerr = 0.0;
    EvalConfig scfg = cfg;
    scfg.max_terms = 4000;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        NumValue v = adaptive_gk(f, cuts[i], cuts[i + 1], scfg);
        seg.push_back(v.value);
        segerr += v.abs_err;
    }
    // partial sums
    std::vector<cplx> ps(seg.size());
    cplx run(0, 0);
    for (size_t i = 0; i < seg.size(); ++i) {
        run += seg[i];
        ps[i] = run;
    }
    // iterated averaging: rows of the Euler scheme
    std::vector<cplx> row = ps;
    cplx best = ps.back();
    double est = std::abs(seg.back());
    for (int it = 0; it < 12 && row.size() >= 2; ++it) {
        std::vector<cplx> nxt(row.size() - 1);
        for (size_t i = 0; i + 1 < row.size(); ++i) nxt[i] = 0.5 * (row[i] + row[i + 1]);
        row.swap(nxt);
        double delta = std::abs(row.back() - best);
        best = row.back();
        if (delta < est) est = delta;
        if (est < 1e-16 * std::abs(best)) break;
    }
    return {best, est + segerr};
}

NumValue quad_integrate(const integrand& f, double a, double b, QuadMode mode,
                        const EvalConfig& cfg) {
    bool binf = std::isinf(b);
    switch (mode) {
        case QuadMode::tanh_sinh:
            return binf ? tanh_sinh_to_inf(f, a, cfg) : tanh_sinh_finite(f, a, b, cfg);
        case QuadMode::adaptive_gk: {
            if (binf) {
                // split at a+1, map the tail
                NumValue head = adaptive_gk(f, a, a + 1.0, cfg);
                auto tailf = [&](double t) -> cplx {
                    double om = 1.0 - t;
                    return f(a + 1.0 + t / om) / (om * om);
                };
                NumValue tail = adaptive_gk(tailf, 0.0, 1.0, cfg);
                return head + tail;
            }
            return adaptive_gk(f, a, b, cfg);
        }
        case QuadMode::oscillatory: {
            if (binf) throw domain_error("oscillatory mode needs a finite interval");
            // scan for sign changes of Re f on a coarse grid to build cuts
            const int kScan = 512;
            std::vector<double> cuts{a};
            double prev = f(a + (b - a) * 1e-9).real();
            for (int i = 1; i < kScan; ++i) {
                double x = a + (b - a) * i / kScan;
                double cur = f(x).real();
                if ((prev < 0 && cur > 0) || (prev > 0 && cur < 0)) cuts.push_back(x);
                prev = cur;
            }
            cuts.push_back(b);
            if (cuts.size() < 8) return adaptive_gk(f, a, b, cfg);
            return quad_oscillatory_segmented(f, cuts, cfg);
        }
    }
    throw domain_error("quad_integrate: unknown mode");
}

NumValue contour_integral_vertical(const std::function<cplx(cplx)>& f, double delta,
                                   double im_cutoff, double decay_exponent,
                                   const EvalConfig& cfg) {
    if (im_cutoff <= 1.0) throw domain_error("contour_integral_vertical: cutoff too small");
    auto g = [&](double t) { return f(cplx(delta, t)); };
    // panels grow geometrically away from the real axis
    std::vector<double> cuts{0.0, 0.5, 1.0};
    while (cuts.back() < im_cutoff) cuts.push_back(std::min(im_cutoff, cuts.back() * 1.35 + 0.5));
    kahan_csum acc;
    double qerr = 0.0;
    EvalConfig pcfg = cfg;
    pcfg.max_terms = 20000;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        NumValue up = adaptive_gk(g, cuts[i], cuts[i + 1], pcfg);
        NumValue dn = adaptive_gk(g, -cuts[i + 1], -cuts[i], pcfg);
        acc.add(up.value);
        acc.add(dn.value);
        qerr += up.abs_err + dn.abs_err;
    }
    // empirical decay over the last decade of t
    double t1 = im_cutoff / 10.0, t2 = im_cutoff;
    double m1 = 0.0, m2 = 0.0;
    for (int j = 0; j < 5; ++j) {
        double ta = t1 * (1.0 + 0.05 * j), tb = t2 * (1.0 - 0.04 * j);
        m1 = std::max({m1, std::abs(g(ta)), std::abs(g(-ta))});
        m2 = std::max({m2, std::abs(g(tb)), std::abs(g(-tb))});
    }
    double fitted = (m1 > 0 && m2 > 0) ? std::log(m1 / m2) / std::log(t2 / t1)
                                       : decay_exponent + 1.0;
    cplx total = acc.value() / (2.0 * kPi);
    double scale = std::max(std::abs(total), 1e-300);
    if (m2 > 1e-14 * scale && fitted < decay_exponent - 0.25)
        throw domain_error("contour_integral_vertical: observed decay exponent " +
                           std::to_string(fitted) + " slower than certified " +
                           std::to_string(decay_exponent));
    double p = std::max(decay_exponent, std::min(fitted, 12.0));
    double tail = (p > 1.0) ? 2.0 * m2 * im_cutoff / (p - 1.0) : 2.0 * m2 * im_cutoff * 10.0;
    tail /= (2.0 * kPi);
    return {total, qerr / (2.0 * kPi) + tail + scale * 1e-15};
}

}  // namespace mixmom
