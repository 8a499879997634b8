#include "propcount/gridpoints.hpp"

#include <stdexcept>

namespace propcount {

const std::vector<Rat>& standard_rationals() {
    static const std::vector<Rat> table = [] {
        std::vector<Rat> t;
        const int entries[][2] = {{1, 1},  {2, 1},  {1, 2},  {-1, 1}, {3, 1},  {-1, 2},
                                  {2, 3},  {-3, 1}, {5, 2},  {1, 3},  {-2, 3}, {4, 1},
                                  {7, 2},  {-1, 4}, {5, 3},  {-5, 2}, {9, 4},  {1, 5},
                                  {-7, 3}, {8, 5},  {-9, 1}, {3, 4},  {-4, 7}, {6, 1}};
        for (auto [num, den] : entries) t.push_back(make_rat(num, den));
        return t;
    }();
    return table;
}

std::vector<std::array<Rat, 4>> parameter_tuples(
    std::size_t count, const std::function<bool(const std::array<Rat, 4>&)>& admissible) {
    const auto& table = standard_rationals();
    const std::size_t m = table.size();
    std::vector<std::array<Rat, 4>> tuples;
    for (std::size_t i = 0; tuples.size() < count; ++i) {
        if (i >= 8 * m * count + 64)
            throw std::logic_error("parameter table exhausted before finding enough tuples");
        const std::array<Rat, 4> cand = {table[i % m], table[(i * 5 + 7) % m],
                                         table[(i * 7 + 13) % m], table[(i * 3 + 19) % m]};
        if (!admissible || admissible(cand)) tuples.push_back(cand);
    }
    return tuples;
}

}  // namespace propcount
