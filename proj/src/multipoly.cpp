#include "propcount/multipoly.hpp"

#include <sstream>

namespace propcount {

namespace {
constexpr const char* kVarNames[kVarCount] = {"a", "b", "c", "u", "v", "w", "alpha"};
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(const std::string& name) {
    for (int i = 0; i < kVarCount; ++i)
        if (name == kVarNames[i]) return static_cast<Var>(i);
    return std::nullopt;
}

MultiPoly::MultiPoly(const Rat& constant) {
    if (constant != 0) terms_[ExpoVec{}] = constant;
}

MultiPoly MultiPoly::variable(Var v, unsigned power) {
    MultiPoly p;
    if (power == 0) return MultiPoly(1L);
    if (power > 200) throw std::invalid_argument("exponent exceeds the supported degree");
    ExpoVec e{};
    e[static_cast<int>(v)] = static_cast<std::uint8_t>(power);
    p.terms_[e] = Rat(1);
    return p;
}

MultiPoly MultiPoly::term(const Rat& coeff, const ExpoVec& expo) {
    MultiPoly p;
    if (coeff != 0) p.terms_[expo] = coeff;
    return p;
}

unsigned MultiPoly::total_degree() const {
    unsigned deg = 0;
    for (const auto& [e, coeff] : terms_) {
        unsigned d = 0;
        for (auto x : e) d += x;
        if (d > deg) deg = d;
    }
    return deg;
}

void MultiPoly::add_term(const ExpoVec& expo, const Rat& coeff) {
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(expo, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(*this);
    for (auto& [e, coeff] : p.terms_) coeff = -coeff;
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [e, coeff] : rhs.terms_) add_term(e, coeff);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [e, coeff] : rhs.terms_) add_term(e, -coeff);
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    MultiPoly prod;
    for (const auto& [e1, c1] : lhs.terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            ExpoVec e;
            for (int i = 0; i < kVarCount; ++i)
                e[i] = static_cast<std::uint8_t>(e1[i] + e2[i]);
            prod.add_term(e, c1 * c2);
        }
    }
    return prod;
}

MultiPoly operator*(const Rat& s, const MultiPoly& p) {
    MultiPoly r;
    if (s == 0) return r;
    r.terms_ = p.terms_;
    for (auto& [e, coeff] : r.terms_) coeff *= s;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(1L);
    MultiPoly base(*this);
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::coeff_of(Var var, unsigned power) const {
    const int idx = static_cast<int>(var);
    MultiPoly result;
    for (const auto& [e, coeff] : terms_) {
        if (e[idx] != power) continue;
        ExpoVec reduced = e;
        reduced[idx] = 0;
        result.add_term(reduced, coeff);
    }
    return result;
}

Rat MultiPoly::eval(const std::map<Var, Rat>& point) const {
    Rat total(0);
    for (const auto& [e, coeff] : terms_) {
        Rat term = coeff;
        for (int i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(static_cast<Var>(i));
            if (it == point.end())
                throw std::invalid_argument(std::string("unbound variable '") + kVarNames[i] +
                                            "' in evaluation");
            term *= rat_pow(it->second, e[i]);
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::subst(const std::map<Var, MultiPoly>& replacements) const {
    MultiPoly result;
    for (const auto& [e, coeff] : terms_) {
        MultiPoly term(coeff);
        ExpoVec kept{};
        for (int i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            auto it = replacements.find(static_cast<Var>(i));
            if (it == replacements.end())
                kept[i] = e[i];
            else
                term *= it->second.pow(e[i]);
        }
        result += term * MultiPoly::term(Rat(1), kept);
    }
    return result;
}

MultiPoly MultiPoly::swap_vars(Var x, Var y) const {
    const int ix = static_cast<int>(x), iy = static_cast<int>(y);
    MultiPoly result;
    for (const auto& [e, coeff] : terms_) {
        ExpoVec swapped = e;
        std::swap(swapped[ix], swapped[iy]);
        result.add_term(swapped, coeff);
    }
    return result;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, coeff] : terms_) {
        Rat mag = coeff;
        const bool neg = coeff < 0;
        if (neg) mag = -mag;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string vars;
        for (int i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += kVarNames[i];
            if (e[i] > 1) vars += '^' + std::to_string(static_cast<int>(e[i]));
        }
        if (vars.empty()) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << '*';
            out << vars;
        }
    }
    return out.str();
}

}  // namespace propcount
