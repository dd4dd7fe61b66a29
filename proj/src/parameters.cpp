#include "schurq/parameters.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace schurq {

ParameterSequence::ParameterSequence(Kind kind, std::vector<Rational> values)
    : kind_(kind), values_(std::move(values)) {
    if (values_.empty() || values_[0] != 0)
        throw std::invalid_argument("parameter sequence must start with a_1 = 0");
}

ParameterSequence ParameterSequence::classical(int count) {
    if (count < 1) throw std::invalid_argument("parameter prefix needs at least a_1");
    return ParameterSequence(Kind::classical,
                             std::vector<Rational>(static_cast<std::size_t>(count), Rational(0)));
}

ParameterSequence ParameterSequence::factorial(int count) {
    if (count < 1) throw std::invalid_argument("parameter prefix needs at least a_1");
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(count));
    for (int k = 1; k <= count; ++k) values.emplace_back(k - 1);
    return ParameterSequence(Kind::factorial, std::move(values));
}

ParameterSequence ParameterSequence::custom(std::vector<Rational> values) {
    return ParameterSequence(Kind::custom, std::move(values));
}

ParameterSequence ParameterSequence::parse(std::string_view spec, int count) {
    if (spec == "classical") return classical(count);
    if (spec == "factorial") return factorial(count);
    constexpr std::string_view prefix = "custom:";
    if (spec.substr(0, prefix.size()) == prefix) {
        std::vector<Rational> values;
        std::string buf(spec.substr(prefix.size()));
        std::istringstream in(buf);
        std::string token;
        while (std::getline(in, token, ',')) values.push_back(parse_rational(token));
        return custom(std::move(values));
    }
    throw std::invalid_argument("unknown parameter spec: " + std::string(spec));
}

const Rational& ParameterSequence::at(int k) const {
    if (k < 1 || k > count())
        throw std::out_of_range("parameter a_" + std::to_string(k) + " beyond stored prefix of " +
                                std::to_string(count()));
    return values_[static_cast<std::size_t>(k - 1)];
}

void ParameterSequence::require(int k, const char* what) const {
    if (k > count())
        throw std::out_of_range(std::string(what) + " needs parameters up to a_" +
                                std::to_string(k) + ", prefix has " + std::to_string(count()));
}

bool ParameterSequence::pairwise_distinct(int upto) const {
    require(upto, "distinctness check");
    std::set<Rational> seen;
    for (int k = 1; k <= upto; ++k)
        if (!seen.insert(at(k)).second) return false;
    return true;
}

std::string ParameterSequence::to_string() const {
    switch (kind_) {
        case Kind::classical: return "classical";
        case Kind::factorial: return "factorial";
        case Kind::custom: break;
    }
    std::string out = "custom:";
    for (int k = 1; k <= count(); ++k) {
        if (k > 1) out += ",";
        out += schurq::to_string(at(k));
    }
    return out;
}

Rational generalized_power(const Rational& x, int k, const ParameterSequence& a) {
    if (k < 0) throw std::invalid_argument("negative generalized power");
    a.require(k, "generalized power");
    Rational out(1);
    for (int j = 1; j <= k; ++j) out *= x - a.at(j);
    return out;
}

MultiPoly generalized_power(const MultiPoly& x, int k, const ParameterSequence& a) {
    if (k < 0) throw std::invalid_argument("negative generalized power");
    a.require(k, "generalized power");
    MultiPoly out = MultiPoly::constant(x.n_vars(), Rational(1));
    for (int j = 1; j <= k; ++j) out = out * (x - a.at(j));
    return out;
}

Rational falling_factorial(const Rational& x, int k) {
    Rational out(1);
    for (int j = 0; j < k; ++j) out *= x - Rational(j);
    return out;
}

std::vector<Rational> node_point(const StrictPartition& lambda, const ParameterSequence& a,
                                 int n) {
    if (n < lambda.length())
        throw std::invalid_argument("node point needs n >= length of lambda");
    a.require(lambda.max_part() + 1, "node point");
    std::vector<Rational> point(static_cast<std::size_t>(n), Rational(0));
    for (int i = 1; i <= lambda.length(); ++i)
        point[static_cast<std::size_t>(i - 1)] = a.at(lambda.part(i) + 1);
    return point;
}

Rational h_weight(const StrictPartition& mu, const ParameterSequence& a) {
    a.require(mu.max_part() + 1, "h_weight");
    const int l = mu.length();
    Rational out(1);
    for (int i = 1; i <= l; ++i) {
        const Rational& top = a.at(mu.part(i) + 1);
        std::set<int> skipped;
        for (int j = i + 1; j <= l; ++j) skipped.insert(mu.part(j) + 1);
        for (int k = 1; k <= mu.part(i); ++k) {
            if (skipped.count(k)) continue;
            out *= top - a.at(k);
        }
        for (int j = i + 1; j <= l; ++j) out *= top + a.at(mu.part(j) + 1);
    }
    return out;
}

}  // namespace schurq
