// Walks through the geometric counterexample with the library API.

#include <sametype/sametype.hpp>

#include <iostream>

int main() {
    using namespace sametype;

    const Rational q(1, 4);
    const ScaleParam alpha(Rational(1, 2));

    // X ~ geometric(1/4); Y is X's d.f. scaled by 1/2, survival (1/4)^(k/2).
    const DiscreteDist x = geometric(q);
    const DiscreteDist y = df_scale(x, alpha);

    const RationalPGF qx = *pgf_of(x).exact;
    const RationalPGF qy = *pgf_of(y).exact;
    std::cout << "Q_X(s) = " << to_string(qx) << "\n"
              << "Q_Y(s) = " << to_string(qy) << "\n"
              << "Q_X(1/2 + s/2) = " << to_string(thin(qx, alpha)) << "\n"
              << "Q_Y(1/2 + s/2) = " << to_string(thin(qy, alpha)) << "\n";

    std::cout << "d.f. relation G(k) = F(k/2): " << std::boolalpha << def22_holds(x, y, alpha) << "\n"
              << "thinning Q_X = Q_Y(1/2 + s/2): " << def21_holds(qx, qy, alpha) << "\n"
              << "thinning Q_Y = Q_X(1/2 + s/2): " << def21_holds(qy, qx, alpha) << "\n";

    // The thinning relation does hold, just at a different scale.
    if (auto a = def21_find_alpha_geometric(q, Rational(1, 2)))
        std::cout << "Q_X = Q_Y(1 - a + a s) at a = " << format_short(*a) << "\n";
}
