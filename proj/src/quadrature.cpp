#include "muskat/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace muskat {
namespace quad {

double one_minus_cos_over_h2(double h) {
    const double a = std::abs(h);
    if (a < 1e-4) {
        // 1/2 - h^2/24 + h^4/720
        const double h2 = h * h;
        return 0.5 - h2 / 24.0 + h2 * h2 / 720.0;
    }
    return (1.0 - std::cos(h)) / (h * h);
}

namespace {

struct GlRule {
    const double* x;
    const double* w;
    int n;
};

// Nodes/weights on [-1, 1], symmetric halves stored in full.
const double gl4_x[] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                        0.8611363115940526};
const double gl4_w[] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                        0.3478548451374538};

const double gl6_x[] = {-0.9324695142031521, -0.6612093864662645, -0.2386191860831969,
                        0.2386191860831969,  0.6612093864662645,  0.9324695142031521};
const double gl6_w[] = {0.1713244923791704, 0.3607615730481386, 0.4679139345726910,
                        0.4679139345726910, 0.3607615730481386, 0.1713244923791704};

const double gl8_x[] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                        -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                        0.7966664774136267,  0.9602898564975363};
const double gl8_w[] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                        0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                        0.2223810344533745, 0.1012285362903763};

const double gl16_x[] = {-0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
                         -0.7554044083550030, -0.6178762444026438, -0.4580167776572274,
                         -0.2816035507792589, -0.0950125098376374, 0.0950125098376374,
                         0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
                         0.7554044083550030,  0.8656312023878318,  0.9445750230732326,
                         0.9894009349916499};
const double gl16_w[] = {0.0271524594117541, 0.0622535239386479, 0.0951585116824928,
                         0.1246289712555339, 0.1495959888165767, 0.1691565193950025,
                         0.1826034150449236, 0.1894506104550685, 0.1894506104550685,
                         0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
                         0.1246289712555339, 0.0951585116824928, 0.0622535239386479,
                         0.0271524594117541};

GlRule rule_for(int order) {
    switch (order) {
        case 4: return {gl4_x, gl4_w, 4};
        case 6: return {gl6_x, gl6_w, 6};
        case 8: return {gl8_x, gl8_w, 8};
        case 16: return {gl16_x, gl16_w, 16};
        default: throw std::invalid_argument("unsupported Gauss-Legendre order");
    }
}

}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order) {
    const GlRule r = rule_for(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < r.n; ++i) s += r.w[i] * f(mid + half * r.x[i]);
    return s * half;
}

double oscillation_resolved(const std::function<double(double)>& f, double a, double b,
                            double max_panel, int order) {
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / max_panel)));
    const double width = (b - a) / panels;
    double s = 0.0;
    for (int i = 0; i < panels; ++i)
        s += gauss_legendre(f, a + i * width, a + (i + 1) * width, order);
    return s;
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson(a, fa, b, fb, fm);
    return adaptive_step(f, a, fa, b, fb, fm, whole, tol, max_depth);
}

namespace {

// Auxiliary functions of the sine integral: Si(x) = pi/2 - f(x)cos(x) - g(x)sin(x)
// with the asymptotic series, excellent for x >= 32.
void si_aux(double x, double& f, double& g) {
    const double x2 = x * x;
    // f(x) ~ (1/x)(1 - 2!/x^2 + 4!/x^4 - 6!/x^6 + 8!/x^8)
    f = (1.0 - 2.0 / x2 + 24.0 / (x2 * x2) - 720.0 / (x2 * x2 * x2) +
         40320.0 / (x2 * x2 * x2 * x2)) /
        x;
    // g(x) ~ (1/x^2)(1 - 3!/x^2 + 5!/x^4 - 7!/x^6 + 9!/x^8)
    g = (1.0 - 6.0 / x2 + 120.0 / (x2 * x2) - 5040.0 / (x2 * x2 * x2) +
         362880.0 / (x2 * x2 * x2 * x2)) /
        x2;
}

}  // namespace

double cos_kernel_tail(double a) {
    if (a < 32.0) throw std::invalid_argument("cos_kernel_tail requires a >= 32");
    // int_a^inf (1-cos h)/h^2 dh = (1-cos a)/a + pi/2 - Si(a)
    //                            = (1-cos a)/a + f(a)cos(a) + g(a)sin(a)
    double f, g;
    si_aux(a, f, g);
    return (1.0 - std::cos(a)) / a + f * std::cos(a) + g * std::sin(a);
}

double cos_kernel_integral(double a, double b) { return cos_kernel_tail(a) - cos_kernel_tail(b); }

LogMesh LogMesh::make(double h_min, double h_max, int nodes_per_decade) {
    if (!(h_min > 0.0) || !(h_max > h_min))
        throw std::invalid_argument("log mesh requires 0 < h_min < h_max");
    if (nodes_per_decade < 2) throw std::invalid_argument("log mesh needs >= 2 nodes per decade");
    const double lmin = std::log10(h_min);
    const double lmax = std::log10(h_max);
    const int n = std::max(2, static_cast<int>(std::ceil((lmax - lmin) * nodes_per_decade)) + 1);
    const double dl = (lmax - lmin) / (n - 1);
    const double ln10 = std::log(10.0);
    LogMesh mesh;
    mesh.nodes.resize(n);
    mesh.weights.resize(n);
    for (int i = 0; i < n; ++i) mesh.nodes[i] = std::pow(10.0, lmin + i * dl);
    // trapezoid in log h:  int F dh = int F(h) h dlog(h) * ln 10
    for (int i = 0; i < n; ++i) {
        const double wlog = (i == 0 || i == n - 1) ? 0.5 * dl : dl;
        mesh.weights[i] = mesh.nodes[i] * wlog * ln10;
    }
    return mesh;
}

}  // namespace quad
}  // namespace muskat
