// Timing comparison of the serial reference kernels against the OpenMP ones.
#include <chrono>
#include <cstdio>
#include <functional>

#include "fitbound/automorphism.hpp"
#include "fitbound/constructions.hpp"
#include "fitbound/frobenius_identity.hpp"
#include "fitbound/kernels.hpp"

using namespace fitbound;

namespace {

double ms_of(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-42s %10.1f ms %10.1f ms %8.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    std::printf("%-42s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        DDomainGroup D = build_ddomain(3, 2, 1);  // order 729
        const auto* table = D.group->table().data();
        std::int64_t n = D.group->order();
        bool r1 = true, r2 = true;
        double s = ms_of([&] { r1 = kernels::associativity_serial(table, n); });
        double p = ms_of([&] { r2 = kernels::associativity_parallel(table, n); });
        row("ddomain q=9 associativity (729^3)", s, p);
        if (r1 != r2) std::printf("  MISMATCH\n");
    }
    {
        ShiftPowerResult sp = shift_power(stock("A5"), 2);  // order 3600
        sp.group->exponent();                               // warm the cache
        IntPolynomial f = IntPolynomial::from_ints({-1, 0, 7});
        IdentityCheck r1, r2;
        double s = ms_of([&] { r1 = satisfies_ordered_serial(sp.shift, f); });
        double p = ms_of([&] { r2 = satisfies_ordered(sp.shift, f); });
        row("A5xA5 ordered identity -1 + 7x^2", s, p);
        if (r1.holds != r2.holds || r1.witness != r2.witness)
            std::printf("  MISMATCH\n");
    }
    {
        FiniteField K(7, 5);  // GF(16807)
        MinimalIdentity r1, r2;
        double s = ms_of([&] { r1 = min_primitive_identity_degree(K, 7, -1, false); });
        double p = ms_of([&] { r2 = min_primitive_identity_degree(K, 7, -1, true); });
        row("GF(7^5) minimal identity search", s, p);
        if (r1.degree != r2.degree || r1.coeffs != r2.coeffs)
            std::printf("  MISMATCH\n");
    }
    {
        FiniteField K(7, 5);  // GF(16807)
        std::vector<Int> coeffs{Int(-1), Int(0), Int(0), Int(0), Int(0), Int(1)};
        AdditiveIdentityProblem prob{&K, 7, coeffs};
        AdditiveCheck r1, r2;
        double s = ms_of([&] { r1 = check_additive_identity_serial(prob); });
        double p = ms_of([&] { r2 = check_additive_identity(prob); });
        row("GF(7^5) additive identity check", s, p);
        if (r1.holds != r2.holds) std::printf("  MISMATCH\n");
    }
    return 0;
}
