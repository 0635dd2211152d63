#include "support.hpp"

#include <cmath>

namespace testsupport {

namespace {

// 8-point Gauss-Legendre on [-1, 1]
const double kNodes[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                          -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                          0.7966664774136267,  0.9602898564975363};
const double kWeights[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                            0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};

double eval_coefficient(const PolyForm& f, const std::vector<double>& t)
{
    double acc = 0.0;
    for (const auto& [k, c] : f.terms()) {
        double term = c.get_d();
        for (std::size_t v = 0; v < k.exps.size(); ++v)
            term *= std::pow(t[v], k.exps[v]);
        acc += term;
    }
    return acc;
}

double integrate_rec(const PolyForm& f, std::vector<double>& t, std::size_t level, double remaining)
{
    if (level == t.size())
        return eval_coefficient(f, t);
    double acc = 0.0;
    double half = remaining / 2.0;
    for (int i = 0; i < 8; ++i) {
        t[level] = half * (kNodes[i] + 1.0);
        acc += kWeights[i] * integrate_rec(f, t, level + 1, remaining - t[level]);
    }
    return acc * half;
}

}  // namespace

double quadrature_integral(const PolyForm& f)
{
    int n = f.ambient();
    if (n == 0) {
        std::vector<double> none;
        return eval_coefficient(f, none);
    }
    std::vector<double> t(n, 0.0);
    return integrate_rec(f, t, 0, 1.0);
}

}  // namespace testsupport
