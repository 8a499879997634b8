#include "propcount/parking.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace propcount {

namespace {

void check_prefs(const ParkingFn& f) {
    // n = 0 is the empty parking function (it can arise as a factor).
    if (f.n < 0 || f.c < 1) throw std::invalid_argument("parking function needs n >= 0, c >= 1");
    if (static_cast<int>(f.prefs.size()) != f.n)
        throw std::invalid_argument("expected " + std::to_string(f.n) + " preferences");
    for (int p : f.prefs)
        if (p < 1 || p > f.n + f.c)
            throw std::invalid_argument("preference " + std::to_string(p) + " outside 1.." +
                                        std::to_string(f.n + f.c));
}

std::vector<int> block_prefix_sums(const ParkingFn& f) {
    std::vector<int> prefix(static_cast<std::size_t>(f.n + f.c) + 1, 0);
    for (int p : f.prefs) ++prefix[static_cast<std::size_t>(p)];
    for (std::size_t i = 1; i < prefix.size(); ++i) prefix[i] += prefix[i - 1];
    return prefix;
}

}  // namespace

bool ParkingFn::is_valid() const {
    check_prefs(*this);
    const auto prefix = block_prefix_sums(*this);
    // Cars preferring spaces beyond i must fit in the usable spaces
    // beyond i, which forces |B_1|+...+|B_i| >= i - c + 1 for i < n + c.
    for (int i = 1; i <= n + c - 1; ++i)
        if (prefix[static_cast<std::size_t>(i)] < i - c + 1) return false;
    return true;
}

std::string ParkingFn::literal() const {
    std::ostringstream out;
    out << "n=" << n << " c=" << c << " prefs=";
    for (int z = 1; z <= n; ++z) {
        if (z > 1) out << ',';
        out << prefs[static_cast<std::size_t>(z) - 1];
    }
    return out.str();
}

ParkingFn parse_parking_literal(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    ParkingFn f;
    bool have_n = false, have_c = false, have_prefs = false;
    while (in >> tok) {
        try {
            if (tok.rfind("n=", 0) == 0) {
                f.n = std::stoi(tok.substr(2));
                have_n = true;
            } else if (tok.rfind("c=", 0) == 0) {
                f.c = std::stoi(tok.substr(2));
                have_c = true;
            } else if (tok.rfind("prefs=", 0) == 0) {
                std::stringstream ss(tok.substr(6));
                std::string item;
                while (std::getline(ss, item, ',')) f.prefs.push_back(std::stoi(item));
                have_prefs = true;
            } else {
                throw std::invalid_argument("unexpected token");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad parking literal: " + text);
        }
    }
    if (!have_n || !have_c || !have_prefs)
        throw std::invalid_argument("parking literal needs n=, c=, prefs=: " + text);
    check_prefs(f);
    return f;
}

ParkOutcome park(const ParkingFn& f, const std::vector<int>& arrival_order) {
    check_prefs(f);
    std::vector<int> order = arrival_order;
    if (order.empty()) {
        order.resize(static_cast<std::size_t>(f.n));
        std::iota(order.begin(), order.end(), 1);
    }
    {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (int z = 1; z <= f.n; ++z)
            if (sorted[static_cast<std::size_t>(z) - 1] != z)
                throw std::invalid_argument("arrival order must be a permutation of 1..n");
    }
    ParkOutcome out;
    out.assignment.assign(static_cast<std::size_t>(f.n), 0);
    std::vector<bool> occupied(static_cast<std::size_t>(f.n + f.c) + 1, false);
    out.success = true;
    for (int z : order) {
        const int want = f.prefs[static_cast<std::size_t>(z) - 1];
        int spot = 0;
        for (int s = want; s <= f.n + f.c - 1; ++s) {
            if (!occupied[static_cast<std::size_t>(s)]) {
                spot = s;
                break;
            }
        }
        if (spot == 0) {
            out.success = false;
            break;
        }
        occupied[static_cast<std::size_t>(spot)] = true;
        out.assignment[static_cast<std::size_t>(z) - 1] = spot;
        if (spot == want) out.lucky.push_back(z);
    }
    std::sort(out.lucky.begin(), out.lucky.end());
    if (out.success) {
        for (int s = 1; s <= f.n + f.c; ++s)
            if (!occupied[static_cast<std::size_t>(s)]) out.empty.push_back(s);
    }
    return out;
}

void for_each_parking(int n, int c, const std::function<void(const ParkingFn&)>& fn) {
    if (n < 1 || c < 1) throw std::invalid_argument("parking enumeration needs n >= 1, c >= 1");
    double candidates = 1;
    for (int i = 0; i < n; ++i) candidates *= n + c - 1;
    if (candidates > static_cast<double>(kParkingEnumBudget))
        throw std::invalid_argument("parking enumeration over budget at n=" + std::to_string(n) +
                                    ", c=" + std::to_string(c));
    ParkingFn f;
    f.n = n;
    f.c = c;
    // A car preferring the last space can never park, so the sweep stays
    // inside 1..n+c-1.
    f.prefs.assign(static_cast<std::size_t>(n), 1);
    while (true) {
        if (f.is_valid()) fn(f);
        int z = 0;
        while (z < n) {
            if (f.prefs[static_cast<std::size_t>(z)] < n + c - 1) {
                ++f.prefs[static_cast<std::size_t>(z)];
                break;
            }
            f.prefs[static_cast<std::size_t>(z)] = 1;
            ++z;
        }
        if (z >= n) break;
    }
}

Int parking_count(int n, int c) {
    Int count = 0;
    for_each_parking(n, c, [&](const ParkingFn&) { ++count; });
    return count;
}

MultiPoly lucky_poly(int n, int c) {
    MultiPoly sum;
    for_each_parking(n, c, [&](const ParkingFn& f) {
        const ParkOutcome out = park(f);
        sum += MultiPoly::variable(Var::u, static_cast<unsigned>(out.lucky.size()));
    });
    return sum;
}

std::vector<ParkingFn> prime_decompose(const ParkingFn& f) {
    if (f.c != 1) throw std::invalid_argument("prime decomposition applies to c = 1");
    if (!f.is_valid()) throw std::invalid_argument("not a parking function: " + f.literal());
    const auto prefix = block_prefix_sums(f);
    std::vector<int> cuts;  // space indices after which to cut
    for (int i = 1; i < f.n; ++i)
        if (prefix[static_cast<std::size_t>(i)] == i) cuts.push_back(i);
    cuts.push_back(f.n);

    std::vector<ParkingFn> factors;
    int lo = 0;
    for (int hi : cuts) {
        // Cars preferring spaces lo+1..hi, relabeled order-isomorphically.
        std::vector<int> cars;
        for (int z = 1; z <= f.n; ++z) {
            const int p = f.prefs[static_cast<std::size_t>(z) - 1];
            if (p > lo && p <= hi) cars.push_back(z);
        }
        ParkingFn factor;
        factor.n = static_cast<int>(cars.size());
        factor.c = 1;
        for (int z : cars) factor.prefs.push_back(f.prefs[static_cast<std::size_t>(z) - 1] - lo);
        factors.push_back(std::move(factor));
        lo = hi;
    }
    return factors;
}

std::vector<ParkingFn> split_at_empty_spaces(const ParkingFn& f) {
    if (!f.is_valid()) throw std::invalid_argument("not a parking function: " + f.literal());
    const ParkOutcome out = park(f);
    std::vector<ParkingFn> factors;
    int lo = 0;
    for (int e : out.empty) {
        std::vector<int> cars;
        for (int z = 1; z <= f.n; ++z) {
            const int p = f.prefs[static_cast<std::size_t>(z) - 1];
            if (p > lo && p < e) cars.push_back(z);
        }
        ParkingFn factor;
        factor.n = e - lo - 1;
        factor.c = 1;
        for (int z : cars) factor.prefs.push_back(f.prefs[static_cast<std::size_t>(z) - 1] - lo);
        if (static_cast<int>(factor.prefs.size()) != factor.n)
            throw std::logic_error("split inconsistent with the parking outcome");
        factors.push_back(std::move(factor));
        lo = e;
    }
    return factors;
}

bool is_prime_parking(const ParkingFn& f) {
    if (f.c != 1) throw std::invalid_argument("primality applies to c = 1");
    if (!f.is_valid()) return false;
    const auto prefix = block_prefix_sums(f);
    for (int i = 1; i < f.n; ++i)
        if (prefix[static_cast<std::size_t>(i)] <= i) return false;
    return true;
}

MultiPoly prime_lucky_poly(int n) {
    MultiPoly sum;
    for_each_parking(n, 1, [&](const ParkingFn& f) {
        if (!is_prime_parking(f)) return;
        const ParkOutcome out = park(f);
        sum += MultiPoly::variable(Var::u, static_cast<unsigned>(out.lucky.size()));
    });
    return sum;
}

namespace {

std::string sweep_summary(long checked, long bad, const std::string& first_bad) {
    return std::to_string(checked) + " checked, " + std::to_string(bad) + " failures" +
           (first_bad.empty() ? "" : " [" + first_bad + "]");
}

// Runs fn over every preference map [n] -> [n+c], valid or not.
void for_each_pref_map(int n, int c, const std::function<void(const ParkingFn&)>& fn) {
    ParkingFn f;
    f.n = n;
    f.c = c;
    f.prefs.assign(static_cast<std::size_t>(n), 1);
    while (true) {
        fn(f);
        int z = 0;
        while (z < n) {
            if (f.prefs[static_cast<std::size_t>(z)] < n + c) {
                ++f.prefs[static_cast<std::size_t>(z)];
                break;
            }
            f.prefs[static_cast<std::size_t>(z)] = 1;
            ++z;
        }
        if (z >= n) break;
    }
}

}  // namespace

Report order_invariance_sweep(int n, int c) {
    if (n > 5) throw std::invalid_argument("order sweep capped at n = 5 (n! orders per map)");
    Report report;
    long checked = 0, bad = 0;
    std::string first_bad;
    std::vector<int> order(static_cast<std::size_t>(n));
    for_each_pref_map(n, c, [&](const ParkingFn& f) {
        ++checked;
        std::iota(order.begin(), order.end(), 1);
        const bool base = park(f, order).success;
        bool invariant = true;
        while (std::next_permutation(order.begin(), order.end()))
            if (park(f, order).success != base) {
                invariant = false;
                break;
            }
        if (!invariant) {
            ++bad;
            if (first_bad.empty()) first_bad = f.literal();
        }
    });
    report.add("parkability is arrival-order invariant", sweep_summary(checked, bad, first_bad),
               sweep_summary(checked, 0, ""));
    return report;
}

Report block_criterion_sweep(int n, int c) {
    Report report;
    long checked = 0, bad = 0;
    std::string first_bad;
    for_each_pref_map(n, c, [&](const ParkingFn& f) {
        ++checked;
        if (park(f).success != f.is_valid()) {
            ++bad;
            if (first_bad.empty()) first_bad = f.literal();
        }
    });
    report.add("simulation success = block criterion", sweep_summary(checked, bad, first_bad),
               sweep_summary(checked, 0, ""));
    return report;
}

Report prime_compatibility_sweep(int n) {
    Report report;
    long checked = 0, bad = 0;
    std::string first_bad;
    for_each_parking(n, 1, [&](const ParkingFn& f) {
        ++checked;
        long total = static_cast<long>(park(f).lucky.size());
        long from_factors = 0;
        for (const auto& factor : prime_decompose(f))
            from_factors += static_cast<long>(park(factor).lucky.size());
        if (total != from_factors) {
            ++bad;
            if (first_bad.empty()) first_bad = f.literal();
        }
    });
    report.add("lucky counts add up over prime factors", sweep_summary(checked, bad, first_bad),
               sweep_summary(checked, 0, ""));
    return report;
}

}  // namespace propcount
