#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace derham {

// Exact scalar type for the whole engine. Every computation in this
// library is over Q; there is no floating point on any code path that
// feeds a result or a test.
using Rational = mpq_class;

struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct presentation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// n! as an exact integer.
inline mpz_class factorial(unsigned long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Accepts "p", "-p", "p/q"; rejects anything mpq does not parse or q == 0.
inline Rational parse_rational(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw argument_error("malformed rational: '" + s + "'");
    if (sgn(q.get_den()) == 0)
        throw argument_error("zero denominator in rational: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace derham
