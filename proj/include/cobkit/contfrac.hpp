#pragma once

/**
 * Admissible continued fractions
 *
 *     alpha/beta = [a1, 2b1, a2, 2b2, ..., an]
 *                = a1 + 1/(2b1 + 1/(a2 + 1/(2b2 + ... + 1/an)))
 *
 * with every term nonzero and a_i * b_i > 0 for i < n. Such a sequence is
 * also a 4-plat description of the two-bridge link S(alpha, beta).
 *
 * Storage keeps b_i; the bracket text form shows 2b_i, so "[2,4,-1]" is
 * a = (2, -1), b = (2).
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace cobkit {

struct AdmissibleCF {
    std::vector<Int> a;
    std::vector<Int> b;
    Int alpha = 0;
    Int beta = 0;

    std::size_t length() const { return a.size(); }

    friend bool operator==(const AdmissibleCF&, const AdmissibleCF&) = default;
};

/// Right-to-left exact fold of [a1, 2b1, ..., an].
inline Rational eval_cf(std::span<const Int> a, std::span<const Int> b) {
    detail::require(!a.empty(), "eval_cf: empty a-sequence");
    detail::require(a.size() == b.size() + 1, "eval_cf: need |a| = |b| + 1, got |a| = " + std::to_string(a.size()) +
                                                  ", |b| = " + std::to_string(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        detail::require(a[i] != 0, "eval_cf: a[" + std::to_string(i + 1) + "] is zero");
    for (std::size_t i = 0; i < b.size(); ++i)
        detail::require(b[i] != 0, "eval_cf: b[" + std::to_string(i + 1) + "] is zero");

    Rational v(a.back());
    for (std::size_t i = b.size(); i-- > 0;) {
        if (v.is_zero()) throw evaluation_error("eval_cf: zero denominator below term a[" + std::to_string(i + 2) + "]");
        v = Rational(2 * b[i]) + v.reciprocal();
        if (v.is_zero()) throw evaluation_error("eval_cf: zero denominator below term b[" + std::to_string(i + 1) + "]");
        v = Rational(a[i]) + v.reciprocal();
    }
    return v;
}

inline Rational eval_cf(const AdmissibleCF& cf) { return eval_cf(cf.a, cf.b); }

struct CfValidation {
    bool ok = true;
    std::string clause;                // empty when ok
    std::optional<std::size_t> index;  // 1-based term index, when the clause concerns a term

    explicit operator bool() const { return ok; }
};

/// Checks every AdmissibleCF invariant; reports the first violated clause.
inline CfValidation validate_admissible(const AdmissibleCF& cf) {
    auto fail = [](std::string clause, std::optional<std::size_t> idx = std::nullopt) {
        return CfValidation{false, std::move(clause), idx};
    };
    if (cf.a.empty()) return fail("n >= 1");
    if (cf.b.size() + 1 != cf.a.size()) return fail("|b| = |a| - 1");
    for (std::size_t i = 0; i < cf.a.size(); ++i)
        if (cf.a[i] == 0) return fail("a_i != 0", i + 1);
    for (std::size_t i = 0; i < cf.b.size(); ++i)
        if (cf.b[i] == 0) return fail("b_i != 0", i + 1);
    for (std::size_t i = 0; i < cf.b.size(); ++i)
        if ((cf.a[i] > 0) != (cf.b[i] > 0)) return fail("a_i * b_i > 0", i + 1);
    if (!(0 < cf.beta && cf.beta < cf.alpha)) return fail("0 < beta < alpha");
    if (gcd(cf.alpha, cf.beta) != 1) return fail("gcd(alpha, beta) = 1");
    if (cf.beta % 2 == 0) return fail("beta odd");
    Rational value;
    try {
        value = eval_cf(cf);
    } catch (const evaluation_error&) {
        return fail("evaluation defined");
    }
    if (value != make_rational(cf.alpha, cf.beta)) return fail("eval = alpha/beta");
    return {};
}

/// Builds a CF from its terms, taking the target from the evaluation;
/// throws domain_error unless the result is admissible.
inline AdmissibleCF make_admissible_cf(std::vector<Int> a, std::vector<Int> b) {
    Rational v = eval_cf(a, b);
    detail::require(v.sign() > 0, "continued fraction value " + v.to_fraction() + " is not positive");
    AdmissibleCF cf{std::move(a), std::move(b), to_int(v.num()), to_int(v.den())};
    auto check = validate_admissible(cf);
    if (!check) {
        std::string where = check.index ? " at index " + std::to_string(*check.index) : "";
        throw domain_error("not an admissible continued fraction: violates " + check.clause + where);
    }
    return cf;
}

// ---------------------------------------------------------------------------
// Bracket text form "[a1,2b1,a2,...,an]"

inline std::string format_cf(std::span<const Int> a, std::span<const Int> b) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(a[i]);
        if (i < b.size()) s += "," + std::to_string(2 * b[i]);
    }
    return s + "]";
}

inline std::string format_cf(const AdmissibleCF& cf) { return format_cf(cf.a, cf.b); }

struct CfTerms {
    std::vector<Int> a;
    std::vector<Int> b;
};

/// Parses "[a1,2b1,...,an]". Whitespace around entries is tolerated; the
/// canonical form produced by format_cf round-trips exactly.
inline CfTerms parse_cf_terms(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw domain_error("continued fraction must look like [a1,2b1,...,an], got '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    std::vector<Int> entries;
    while (true) {
        auto comma = text.find(',');
        auto item = trim(text.substr(0, comma));
        if (item.empty()) throw domain_error("continued fraction has an empty entry");
        std::size_t pos = 0;
        Int value = 0;
        try {
            value = std::stoll(std::string(item), &pos);
        } catch (const std::exception&) {
            throw domain_error("continued fraction entry '" + std::string(item) + "' is not an integer");
        }
        if (pos != item.size())
            throw domain_error("continued fraction entry '" + std::string(item) + "' is not an integer");
        entries.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (entries.size() % 2 == 0)
        throw domain_error("continued fraction needs an odd number of entries, got " + std::to_string(entries.size()));
    CfTerms terms;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i % 2 == 0) {
            terms.a.push_back(entries[i]);
        } else {
            if (entries[i] % 2 != 0)
                throw domain_error("entry " + std::to_string(i + 1) + " of a continued fraction must be even, got " +
                                   std::to_string(entries[i]));
            terms.b.push_back(entries[i] / 2);
        }
    }
    return terms;
}

inline AdmissibleCF parse_cf(std::string_view text) {
    auto terms = parse_cf_terms(text);
    return make_admissible_cf(std::move(terms.a), std::move(terms.b));
}

// ---------------------------------------------------------------------------
// Search

namespace detail {

inline void check_cf_target(Int alpha, Int beta) {
    require(0 < beta && beta < alpha,
            "need 0 < beta < alpha, got alpha = " + std::to_string(alpha) + ", beta = " + std::to_string(beta));
    require(gcd(alpha, beta) == 1,
            "alpha and beta must be coprime, got " + std::to_string(alpha) + ", " + std::to_string(beta));
    require(beta % 2 != 0, "beta must be odd, got " + std::to_string(beta));
}

// Length of the ordinary continued fraction of alpha/beta.
inline std::size_t euclid_steps(Int alpha, Int beta) {
    std::size_t steps = 0;
    while (beta != 0) {
        Int r = alpha % beta;
        alpha = beta;
        beta = r;
        ++steps;
    }
    return steps;
}

class AdmissibleSearch {
public:
    explicit AdmissibleSearch(std::size_t max_terms) : max_terms_(max_terms) {}

    bool at_a(const Rational& x) {
        if (a_.size() + b_.size() + 1 > max_terms_) return false;
        if (x.is_integer()) {
            if (x.is_zero()) return false;
            a_.push_back(to_int(x.num()));
            return true;
        }
        // a-term and the following b-term share a sign, and the b-term has
        // the sign of 1/(x - a); only floor (x > 1) or ceil (x < -1) qualify.
        for (const Integer& cand : {x.floor(), x.ceil()}) {
            if (cand == 0) continue;
            Rational rest = x - Rational(cand);
            if ((cand > 0) != (rest.sign() > 0)) continue;
            a_.push_back(to_int(cand));
            if (at_b(rest.reciprocal())) return true;
            a_.pop_back();
        }
        return false;
    }

    bool at_b(const Rational& y) {
        if (a_.size() + b_.size() + 2 > max_terms_) return false;
        // The two even integers around y, nearest first, ties toward zero.
        Integer lo = 2 * detail::floor_div(y.floor(), Integer(2));
        Integer hi = lo + 2;
        Rational dlo = y - Rational(lo);
        Rational dhi = Rational(hi) - y;
        bool lo_first = dlo < dhi || (dlo == dhi && abs_value(lo) <= abs_value(hi));
        Integer order[2] = {lo_first ? lo : hi, lo_first ? hi : lo};
        const bool a_positive = a_.back() > 0;
        for (const Integer& even : order) {
            if (even == 0 || (even > 0) != a_positive) continue;
            Rational rest = y - Rational(even);
            if (rest.is_zero()) continue;
            b_.push_back(to_int(Integer(even / 2)));
            if (at_a(rest.reciprocal())) return true;
            b_.pop_back();
        }
        return false;
    }

    std::vector<Int> a_;
    std::vector<Int> b_;

private:
    std::size_t max_terms_;
};

}  // namespace detail

/// Deterministic admissible decomposition of alpha/beta.
///
/// Depth-first over rounding choices: at a-terms floor then ceil (only one
/// is sign-compatible with the next b-term), at b-terms the nearest even
/// integer then the other neighbour. The printed length 2n-1 is capped at
/// 2 * (Euclid steps of alpha/beta) + 4.
inline AdmissibleCF find_admissible_cf(Int alpha, Int beta) {
    detail::check_cf_target(alpha, beta);
    const std::size_t cap = 2 * detail::euclid_steps(alpha, beta) + 4;
    detail::AdmissibleSearch search(cap);
    if (!search.at_a(make_rational(alpha, beta)))
        throw internal_error("find_admissible_cf: no decomposition of " + std::to_string(alpha) + "/" +
                             std::to_string(beta) + " within " + std::to_string(cap) + " terms");
    AdmissibleCF cf{std::move(search.a_), std::move(search.b_), alpha, beta};
    detail::ensure(validate_admissible(cf).ok, "find_admissible_cf produced an invalid decomposition");
    return cf;
}

/// All-positive decomposition by the floor expansion: a-terms take floors,
/// b-terms take the largest even integer below. Returns nullopt when a term
/// would be zero; that only records that the expansion failed.
inline std::optional<AdmissibleCF> find_positive_cf(Int alpha, Int beta) {
    detail::check_cf_target(alpha, beta);
    detail::require(alpha % 2 != 0, "find_positive_cf: alpha must be odd, got " + std::to_string(alpha));
    std::vector<Int> a, b;
    Rational x = make_rational(alpha, beta);
    while (true) {
        Integer term = x.floor();
        if (term <= 0) return std::nullopt;
        a.push_back(to_int(term));
        Rational rest = x - Rational(term);
        if (rest.is_zero()) break;
        Rational y = rest.reciprocal();
        Integer even = 2 * detail::floor_div(y.floor(), Integer(2));
        if (even <= 0) return std::nullopt;
        b.push_back(to_int(Integer(even / 2)));
        Rational tail = y - Rational(even);
        if (tail.is_zero()) return std::nullopt;
        x = tail.reciprocal();
    }
    AdmissibleCF cf{std::move(a), std::move(b), alpha, beta};
    detail::ensure(validate_admissible(cf).ok, "find_positive_cf produced an invalid decomposition");
    return cf;
}

}  // namespace cobkit
