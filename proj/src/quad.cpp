#include "betapoly/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace betapoly::quad {

namespace {

// Gauss-Kronrod 7-15 abscissae and weights on [-1, 1] (QUADPACK values).
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    long seq;  // insertion order, used as a deterministic tie-break
};

struct PanelWorse {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.seq > y.seq;
    }
};

Panel evaluate_panel(const Integrand& f, double a, double b, long seq, long& evaluations) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);

    double fv[15];
    const double fc = f(c);
    fv[14] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = hw * xgk[j];
        fv[2 * j] = f(c - dx);
        fv[2 * j + 1] = f(c + dx);
    }
    evaluations += 15;
    for (int j = 0; j < 15; ++j) {
        if (!std::isfinite(fv[j])) {
            throw QuadratureError("quadrature: integrand is not finite near x = " +
                                  std::to_string(c));
        }
    }

    double resk = wgk[7] * fc;
    double resabs = std::fabs(resk);
    double resg = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double fsum = fv[2 * j] + fv[2 * j + 1];
        resk += wgk[j] * fsum;
        resabs += wgk[j] * (std::fabs(fv[2 * j]) + std::fabs(fv[2 * j + 1]));
        if (j % 2 == 1) resg += wg[j / 2] * fsum;
    }
    const double reskh = 0.5 * resk;
    double resasc = wgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += wgk[j] * (std::fabs(fv[2 * j] - reskh) + std::fabs(fv[2 * j + 1] - reskh));
    }

    const double value = resk * hw;
    resabs *= hw;
    resasc *= hw;
    double err = std::fabs((resk - resg) * hw);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) {
        err = std::max(err, 50.0 * eps * resabs);
    }
    return Panel{a, b, value, err, seq};
}

double deterministic_sum(std::vector<Panel>& panels, double Panel::*member) {
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double s = 0.0, comp = 0.0;  // Kahan
    for (const Panel& p : panels) {
        const double y = p.*member - comp;
        const double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s;
}

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadOptions& opts) {
    if (!(a < b)) throw std::invalid_argument("integrate_finite: need a < b");

    std::vector<double> cuts;
    cuts.push_back(a);
    cuts.push_back(b);
    for (double x : opts.breakpoints) {
        if (x > a && x < b) cuts.push_back(x);
    }
    const double width = b - a;
    for (int j = 1; j <= opts.endpoint_ladder; ++j) {
        const double step = width * std::ldexp(1.0, -j);
        const double lo = a + step;
        const double hi = b - step;
        if (lo < hi) {
            cuts.push_back(lo);
            cuts.push_back(hi);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    long evaluations = 0;
    long seq = 0;
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
    double total_value = 0.0;
    double total_error = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Panel p = evaluate_panel(f, cuts[i], cuts[i + 1], seq++, evaluations);
        total_value += p.value;
        total_error += p.error;
        heap.push(p);
    }

    const double min_width = std::numeric_limits<double>::epsilon() *
                             (std::fabs(a) + std::fabs(b) + 1.0);
    int panels = static_cast<int>(heap.size());
    int stalled = 0;

    auto tolerance = [&]() {
        return std::max(opts.abs_tol, opts.rel_tol * std::fabs(total_value));
    };

    while (total_error > tolerance()) {
        if (panels >= opts.max_panels || stalled == panels) {
            throw QuadratureError(
                "quadrature: error estimate " + std::to_string(total_error) +
                " stalled above tolerance " + std::to_string(tolerance()) + " after " +
                std::to_string(panels) + " panels");
        }
        Panel worst = heap.top();
        heap.pop();
        if (worst.b - worst.a <= min_width || worst.error == 0.0) {
            // Cannot usefully split further; park it and move on.
            stalled += 1;
            heap.push(worst);
            // Rotate: pull the next-worst refinable panel by temporarily
            // popping parked ones.
            std::vector<Panel> parked;
            bool advanced = false;
            while (!heap.empty()) {
                Panel cand = heap.top();
                heap.pop();
                if (cand.b - cand.a > min_width && cand.error > 0.0) {
                    const double mid = 0.5 * (cand.a + cand.b);
                    Panel left = evaluate_panel(f, cand.a, mid, seq++, evaluations);
                    Panel right = evaluate_panel(f, mid, cand.b, seq++, evaluations);
                    total_value += left.value + right.value - cand.value;
                    total_error += left.error + right.error - cand.error;
                    heap.push(left);
                    heap.push(right);
                    panels += 1;
                    advanced = true;
                    break;
                }
                parked.push_back(cand);
            }
            for (const Panel& p : parked) heap.push(p);
            if (!advanced) {
                if (total_error > tolerance()) {
                    throw QuadratureError(
                        "quadrature: interval resolution exhausted with error estimate " +
                        std::to_string(total_error) + " above tolerance " +
                        std::to_string(tolerance()));
                }
                break;
            }
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(f, worst.a, mid, seq++, evaluations);
        Panel right = evaluate_panel(f, mid, worst.b, seq++, evaluations);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        panels += 1;
        stalled = 0;
    }

    // Re-sum in spatial order so the result does not depend on refinement
    // history round-off.
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    QuadResult out;
    out.value = deterministic_sum(all, &Panel::value);
    out.abs_error_estimate = deterministic_sum(all, &Panel::error);
    out.evaluations = evaluations;
    return out;
}

namespace {

constexpr double half_pi = 1.57079632679489661923132169163975144;

QuadOptions mapped_options(const QuadOptions& opts, bool include_zero) {
    QuadOptions m = opts;
    m.breakpoints.clear();
    // Map caller breakpoints (h space) to theta space, and keep the tails
    // well resolved: the tan substitution packs h -> +-inf into the ends.
    for (double h : opts.breakpoints) m.breakpoints.push_back(std::atan(h));
    if (include_zero) m.breakpoints.push_back(0.0);
    m.endpoint_ladder = std::max(opts.endpoint_ladder, 12);
    return m;
}

}  // namespace

QuadResult integrate_real_line(const Integrand& f, const QuadOptions& opts) {
    auto g = [&f](double theta) {
        const double c = std::cos(theta);
        const double h = std::tan(theta);
        return f(h) / (c * c);
    };
    return integrate_finite(g, -half_pi, half_pi, mapped_options(opts, true));
}

QuadResult integrate_half_line(const Integrand& f, const QuadOptions& opts) {
    auto g = [&f](double theta) {
        const double c = std::cos(theta);
        const double h = std::tan(theta);
        return f(h) / (c * c);
    };
    return integrate_finite(g, 0.0, half_pi, mapped_options(opts, false));
}

}  // namespace betapoly::quad
