#include "schurq/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace schurq {

MultiPoly MultiPoly::constant(std::size_t n_vars, const Rational& c) {
    MultiPoly p(n_vars);
    if (c != 0) p.terms_.emplace(Monomial(n_vars), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t n_vars, std::size_t index) {
    if (index >= n_vars) throw std::out_of_range("variable index out of range");
    MultiPoly p(n_vars);
    Monomial m(n_vars);
    m.exponents[index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Monomial(n_vars_));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> MultiPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return static_cast<int>(terms_.rbegin()->first.total_degree());
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
    if (n_vars_ != o.n_vars_)
        throw std::invalid_argument("polynomials live in different variable counts");
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.n_vars() != n_vars_) throw std::invalid_argument("monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(n_vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    out += o;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    out -= o;
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_ring(o);
    MultiPoly out(n_vars_);
    Monomial prod(n_vars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t k = 0; k < n_vars_; ++k)
                prod.exponents[k] = ma.exponents[k] + mb.exponents[k];
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly out(n_vars_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

MultiPoly MultiPoly::operator/(const Rational& c) const {
    if (c == 0) throw std::invalid_argument("division by zero scalar");
    MultiPoly out(n_vars_);
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff / c);
    return out;
}

MultiPoly MultiPoly::operator+(const Rational& c) const {
    MultiPoly out = *this;
    out.add_term(Monomial(n_vars_), c);
    return out;
}

MultiPoly MultiPoly::operator-(const Rational& c) const { return *this + (-c); }

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly out = constant(n_vars_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) out = out * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != n_vars_)
        throw std::invalid_argument("evaluation point has wrong length");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t k = 0; k < n_vars_; ++k)
            if (m.exponents[k] > 0) t *= schurq::pow(point[k], m.exponents[k]);
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::substitute(std::size_t var_index, const MultiPoly& value) const {
    if (var_index >= n_vars_) throw std::out_of_range("substitution index out of range");
    if (value.n_vars() < n_vars_)
        throw std::invalid_argument("substitution value has too few variables");
    const std::size_t m_vars = value.n_vars();
    MultiPoly out(m_vars);
    // Powers of `value` are reused across terms.
    std::vector<MultiPoly> powers{MultiPoly::constant(m_vars, Rational(1))};
    for (const auto& [mono, c] : terms_) {
        const std::uint32_t e = mono.exponents[var_index];
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        Monomial rest(m_vars);
        for (std::size_t k = 0; k < n_vars_; ++k)
            if (k != var_index) rest.exponents[k] = mono.exponents[k];
        MultiPoly part(m_vars);
        part.add_term(rest, c);
        out += part * powers[e];
    }
    return out;
}

MultiPoly MultiPoly::restrict_last_var() const {
    if (n_vars_ == 0) throw std::invalid_argument("no variable left to restrict");
    MultiPoly out(n_vars_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m.exponents.back() != 0) continue;
        Monomial shrunk(std::vector<std::uint32_t>(m.exponents.begin(), m.exponents.end() - 1));
        out.add_term(shrunk, c);
    }
    return out;
}

MultiPoly MultiPoly::extend_vars(std::size_t new_n_vars) const {
    if (new_n_vars < n_vars_) throw std::invalid_argument("cannot shrink variable count");
    MultiPoly out(new_n_vars);
    for (const auto& [m, c] : terms_) {
        Monomial grown(new_n_vars);
        std::copy(m.exponents.begin(), m.exponents.end(), grown.exponents.begin());
        out.terms_.emplace(std::move(grown), c);
    }
    return out;
}

MultiPoly MultiPoly::top_homogeneous() const {
    MultiPoly out(n_vars_);
    auto d = degree();
    if (!d) return out;
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(m.total_degree()) == *d) out.terms_.emplace(m, c);
    return out;
}

bool MultiPoly::is_symmetric() const {
    for (std::size_t k = 0; k + 1 < n_vars_; ++k) {
        MultiPoly swapped(n_vars_);
        for (const auto& [m, c] : terms_) {
            Monomial t = m;
            std::swap(t.exponents[k], t.exponents[k + 1]);
            swapped.terms_.emplace(std::move(t), c);
        }
        if (!(swapped == *this)) return false;
    }
    return true;
}

bool MultiPoly::is_supersymmetric() const {
    if (!is_symmetric()) return false;
    if (n_vars_ <= 1) return true;
    // x1 := t, x2 := -t; group by (degree in t, remaining exponents) and
    // require every positive t-degree to cancel.
    std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, Rational> grouped;
    for (const auto& [m, c] : terms_) {
        std::uint32_t t_deg = m.exponents[0] + m.exponents[1];
        if (t_deg == 0) continue;
        std::vector<std::uint32_t> rest(m.exponents.begin() + 2, m.exponents.end());
        Rational signed_c = (m.exponents[1] % 2 == 0) ? c : -c;
        auto key = std::make_pair(t_deg, std::move(rest));
        auto [it, inserted] = grouped.emplace(std::move(key), signed_c);
        if (!inserted) it->second += signed_c;
    }
    for (const auto& [key, c] : grouped)
        if (c != 0) return false;
    return true;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Leading (highest) term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = m.total_degree() > 0;
        if (abs_c != 1 || !has_vars) {
            out << abs_c.get_str();
            if (has_vars) out << "*";
        }
        bool first_var = true;
        for (std::size_t k = 0; k < n_vars_; ++k) {
            if (m.exponents[k] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << "x" << (k + 1);
            if (m.exponents[k] > 1) out << "^" << m.exponents[k];
        }
    }
    return out.str();
}

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }
    char take() {
        skip_ws();
        return text[pos++];
    }
    bool accept(char c) {
        if (!eof() && peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected digits in polynomial literal");
        return std::string(text.substr(start, pos - start));
    }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::size_t n_vars) {
    Lexer lex{text};
    MultiPoly result(n_vars);
    bool expect_term = true;
    int sign = 1;
    while (!lex.eof()) {
        if (!expect_term) {
            char op = lex.take();
            if (op == '+') sign = 1;
            else if (op == '-') sign = -1;
            else throw std::invalid_argument("expected + or - between terms");
            expect_term = true;
            continue;
        }
        while (lex.peek() == '+' || lex.peek() == '-') {
            if (lex.take() == '-') sign = -sign;
        }
        Rational coeff(sign);
        Monomial mono(n_vars);
        bool saw_factor = false;
        for (;;) {
            if (!lex.eof() && std::isdigit(static_cast<unsigned char>(lex.peek()))) {
                std::string num = lex.number();
                if (lex.accept('/')) num += "/" + lex.number();
                coeff *= parse_rational(num);
                saw_factor = true;
            } else if (!lex.eof() && lex.peek() == 'x') {
                lex.take();
                unsigned long idx = std::stoul(lex.number());
                if (idx == 0 || idx > n_vars)
                    throw std::invalid_argument("variable index out of range in literal");
                unsigned long e = 1;
                if (lex.accept('^')) e = std::stoul(lex.number());
                mono.exponents[idx - 1] += static_cast<std::uint32_t>(e);
                saw_factor = true;
            } else {
                break;
            }
            if (!lex.accept('*')) break;
        }
        if (!saw_factor) throw std::invalid_argument("empty term in polynomial literal");
        result.add_term(mono, coeff);
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !text.empty())
        throw std::invalid_argument("dangling operator in polynomial literal");
    return result;
}

}  // namespace schurq
