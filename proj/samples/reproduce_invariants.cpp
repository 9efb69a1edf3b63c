// Walks through the three hypersurface families: basket determination,
// plurigenera from both sides, and the moduli count.
#include <iostream>

#include "wpsinv/wpsinv.hpp"

int main() {
    using namespace wpsinv;
    const std::pair<const char*, const char*> families[] = {{"X16", "pg2"}, {"X12", "pg3"}, {"X10", "pg4"}};

    for (const auto& [name, preset_name] : families) {
        const FamilyRecord& f = *shipped_catalog().find(name);
        const auto solutions = solve(preset(preset_name));
        std::cout << name << " in P" << f.ambient.str() << ", degree " << f.degrees.front() << "\n";
        for (const auto& s : solutions)
            std::cout << "  solver: basket " << s.basket().str() << ", chi = " << s.chi << "\n";

        const SeriesPrefix series = hypersurface_series(f.ambient, f.degrees.front(), 8);
        const PlurigenusTable table = plurigenus_table(f.data, f.basket, 8);
        std::cout << "  m   P_m (RR)   c_m (Hilbert)\n";
        for (std::int64_t m = 1; m <= 8; ++m)
            std::cout << "  " << m << "   " << table.at(m).str() << "   " << series[m].str() << "\n";
        std::cout << "  dim Aut = " << aut_dimension(f.ambient).str()
                  << ", dim M = " << moduli_dimension(f.ambient, f.degrees.front()).str() << "\n\n";
    }

    const NoetherBound b = noether_lower_bound(5);
    std::cout << "p_g = 5: K^3 >= " << b.value << " > " << expected_noether_bound(5) << "\n";
}
