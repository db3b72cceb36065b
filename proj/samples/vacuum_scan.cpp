// Scans lambda3 for two coupling sets and prints where the potential stops being bounded
// from below, comparing the closed-form test with the complete checker. With lambdaS2 < 0
// the mass term M is negative on the cone and the two agree; with lambdaS2 > 0 M has mixed
// sign and the closed form certifies nothing, while the complete checker still does.

#include "copos/copos.hpp"

#include <cstdio>
#include <string>

int main() {
    copos::Couplings c;
    c.lambda1 = 1;
    c.lambda2 = 1;
    c.lambda4 = 0.5;
    c.lambdaS = 1;
    c.lambdaS1 = -0.5;
    c.absLambdaS12 = 0.5;
    c.rho = 0.5;

    for (double s2 : {-0.25, 0.25}) {
        c.lambdaS2 = s2;
        std::printf("lambdaS2 = %.2f\n%8s  %-16s %-8s  %-16s %s\n", s2, "lambda3", "closed form", "case",
                    "complete", "agree");
        for (int k = -12; k <= 4; ++k) {
            c.lambda3 = 0.25 * k;
            const auto v = copos::vacuum_copositive_thm36(c);
            std::printf("%8.2f  %-16s %-8s  %-16s %s\n", c.lambda3, std::string(to_string(v.decision)).c_str(),
                        std::string(to_string(v.thm36_case)).c_str(), std::string(to_string(v.complete_decision)).c_str(),
                        v.agreement ? "yes" : "no");
        }
        std::printf("\n");
    }

    // Copositivity across the orbit-space parameter for one coupling set.
    c.lambda3 = -1.5;
    c.lambdaS2 = -0.25;
    const auto sweep = copos::sweep_rho(c, copos::uniform_rho_grid(11));
    std::printf("rho sweep at lambda3 = %.2f over 11 points: closed form %s, complete %s\n", c.lambda3,
                std::string(to_string(sweep.thm36_all)).c_str(), std::string(to_string(sweep.complete_all)).c_str());
    return 0;
}
