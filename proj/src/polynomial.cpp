#include "tmf/polynomial.hpp"

#include <sstream>

namespace tmf {

const std::array<const char*, Poly::kVars>& Poly::var_names() {
    static const std::array<const char*, kVars> names = {
        "a1", "a2", "a3", "a4", "a6", "r", "s", "t"};
    return names;
}

Poly Poly::variable(int slot) {
    Poly p;
    Key k{};
    k[slot] = 1;
    p.terms_[k] = 1;
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Key{};
}

Rat Poly::constant_value() const {
    auto it = terms_.find(Key{});
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [k, c] : b.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            Poly::Key k;
            for (int i = 0; i < Poly::kVars; ++i)
                k[i] = static_cast<std::uint8_t>(ka[i] + kb[i]);
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                Rat p = ca * cb;
                if (p != 0) r.terms_[k] = p;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << format_rat(c);
        for (int i = 0; i < kVars; ++i) {
            if (k[i] == 0) continue;
            os << "*" << var_names()[i];
            if (k[i] > 1) os << "^" << static_cast<int>(k[i]);
        }
    }
    return os.str();
}

}  // namespace tmf
