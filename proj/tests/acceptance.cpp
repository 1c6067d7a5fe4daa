// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "freeboson/catalog.hpp"
#include "freeboson/fock.hpp"
#include "freeboson/regularized.hpp"

using namespace freeboson;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream info;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            info << " [failed: " << what << "]";
        }
    }
};

bool criterion(int k, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.info << " [exception: " << e.what() << "]";
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << k << ": " << (out.ok ? "PASS" : "FAIL") << "  " << title << out.info.str() << " ("
              << ms << " ms)" << std::endl;
    return out.ok;
}

void require_report(Outcome& o, const CheckReport& r) {
    o.require(r.passed(), r.check_id + " " + to_string(r.status));
}

Scalar cube(int m) { return Scalar(m) * Scalar(m) * Scalar(m); }

}  // namespace

int main() {
    const FockVector vac = FockVector::vacuum();
    RunConfig defaults;
    bool all = true;

    all &= criterion(1, "Virasoro brackets, m,n in [-3,3], weight <= 10", [&](Outcome& o) {
        for (int m = -3; m <= 3; ++m) {
            for (int n = -3; n <= 3; ++n) {
                const auto r = virasoro_check(m, n, 10);
                require_report(o, r);
                const Scalar c = m + n == 0 ? (cube(m) - Scalar(m)) / Scalar(12) : Scalar(0);
                o.require(r.details["central_term"] == c.str(), "central term at m=" + std::to_string(m));
            }
        }
    });

    all &= criterion(2, "regularized Virasoro brackets, central term m^3/12, Lbar(0) vac = -1/24 vac", [&](Outcome& o) {
        for (int m = -3; m <= 3; ++m) {
            for (int n = -3; n <= 3; ++n) {
                const auto r = modified_virasoro_check(m, n, 10);
                require_report(o, r);
                const Scalar c = m + n == 0 ? cube(m) / Scalar(12) : Scalar(0);
                o.require(r.details["central_term"] == c.str(), "central term at m=" + std::to_string(m));
            }
        }
        o.require(virasoro_bar_apply(0, vac) == Scalar(-1, 24) * vac, "Lbar(0) on the vacuum");
    });

    all &= criterion(3, "pure monomial central terms, r,s in {0,1,2}, m in 1..4", [&](Outcome& o) {
        o.info << " constants:";
        for (int r = 0; r <= 2; ++r) {
            for (int s = 0; s <= 2; ++s) {
                const auto rep = pure_monomial_check(r, s, {1, 2, 3, 4});
                require_report(o, rep);
                const std::string c = rep.details.value("constant", std::string("?"));
                o.info << " (" << r << "," << s << ")=" << c;
                if (r == 0 && s == 0) {
                    o.require(c == "1/12", "constant 1/12");
                }
            }
        }
    });

    all &= criterion(4, "zeta values and regularization constants", [&](Outcome& o) {
        o.require(zeta_neg(2) == Scalar(-1, 12), "zeta(-1) = -1/12");
        // B_k / k! as the coefficients of x / (e^x - 1), inverted term by term
        const int top = 8;
        std::vector<Scalar> u(top + 1), c(top + 1);
        for (int k = 0; k <= top; ++k) {
            u[k] = Scalar(1) / factorial(static_cast<unsigned>(k + 1));
        }
        c[0] = Scalar(1);
        for (int n = 1; n <= top; ++n) {
            for (int k = 1; k <= n; ++k) {
                c[n] -= u[k] * c[n - k];
            }
        }
        for (int k = 2; k <= top; k += 2) {
            const Scalar b = c[k] * factorial(static_cast<unsigned>(k));
            o.require(zeta_neg(k) == -b / Scalar(k), "zeta_neg(" + std::to_string(k) + ")");
        }
        for (int r = 0; r <= 3; ++r) {
            const Scalar sign(r % 2 == 0 ? 1 : -1);
            o.require(regularization_constant(r) == sign * Scalar(1, 2) * zeta_neg(2 * r + 2),
                      "regularization constant r=" + std::to_string(r));
        }
    });

    all &= criterion(5, "four-variable commutator identity, y-orders (2,2,2,2), x-window 3, weight <= 6", [&](Outcome& o) {
        const auto r = theorem1_check(Theorem1Params{});
        require_report(o, r);
        o.require(r.details.value("virasoro_slice", std::string()) == "agrees", "constant slice against MODVIR");
        o.info << " coefficients=" << r.coefficients_checked;
    });

    all &= criterion(6, "VOA axioms on weight <= 3, Jacobi identity for four vectors", [&](Outcome& o) {
        require_report(o, run_check("AXIOMS", defaults));
        require_report(o, run_check("JACOBI", defaults));
    });

    all &= criterion(7, "logarithmic Jacobi, commutator and composite identities with residue link", [&](Outcome& o) {
        for (const char* id : {"NEWJACOBI", "COMM", "GENJACOBI", "GENCOMM"}) {
            const auto r = run_check(id, defaults);
            require_report(o, r);
            o.require(r.details["parts"].size() >= 2, std::string(id) + " runs");
            if (std::string(id) == "COMM") {
                int links = 0;
                for (const auto& p : r.details["parts"]) {
                    if (p["check"] == "RESIDUE-LINK") {
                        ++links;
                        o.require(p["status"] == "pass", "residue link");
                    }
                }
                o.require(links == 2, "residue link on both instances");
            }
        }
    });

    all &= criterion(8, "specialization to the four-variable identity", [&](Outcome& o) {
        require_report(o, run_check("SPECIALIZE", defaults));
    });

    all &= criterion(9, "graded dimensions n <= 30 and character offset", [&](Outcome& o) {
        const auto r = run_check("GRADED-DIM", defaults);
        require_report(o, r);
        o.require(character_offset() == Scalar(-1, 24), "offset -1/24");
        o.info << " dim S_30=" << graded_dim(30);
    });

    all &= criterion(10, "residue changes, Heisenberg relations, extraction consistency", [&](Outcome& o) {
        const auto rc = run_check("RES-CHANGE", defaults);
        require_report(o, rc);
        o.require(rc.coefficients_checked == 50, "50 instances");
        require_report(o, run_check("HEISENBERG", defaults));
        for (const auto& p : basis_up_to(6)) {
            const FockVector v(p);
            for (int r = 0; r <= 2; ++r) {
                const Scalar f = factorial(static_cast<unsigned>(r)) * factorial(static_cast<unsigned>(r));
                for (int n = -3; n <= 3; ++n) {
                    for (bool reg : {false, true}) {
                        o.require(f * gen_quadratic_coeff(r, r, n, reg, v) == quad_apply({r, r, n, reg}, v),
                                  "extraction r=" + std::to_string(r));
                    }
                }
            }
        }
    });

    return all ? 0 : 1;
}
