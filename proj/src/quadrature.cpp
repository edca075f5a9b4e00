#include "cosserat1d/quadrature.hpp"

#include <cmath>

namespace cosserat1d {

namespace {

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights at the even indices.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

double gk15(const std::function<double(double)>& f, double a, double b,
            double& err) {
    const double c = 0.5 * (a + b);
    const double m = 0.5 * (b - a);

    const double f0 = f(c);
    double k15 = wgk[7] * f0;
    double g7 = wg[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = m * xgk[i];
        const double fi = f(c + dx) + f(c - dx);
        k15 += wgk[i] * fi;
        if (i % 2 == 1) g7 += wg[i / 2] * fi;
    }
    k15 *= m;
    g7 *= m;
    err = std::abs(k15 - g7);
    err = std::min(err, 200.0 * err * std::sqrt(200.0 * err));
    return k15;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int depth, int max_depth) {
    double err;
    const double s = gk15(f, a, b, err);
    if (err <= tol || depth >= max_depth) return s;
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, 0.5 * tol, depth + 1, max_depth) +
           adapt(f, c, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    return adapt(f, a, b, abs_tol, 0, max_depth);
}

}  // namespace cosserat1d
