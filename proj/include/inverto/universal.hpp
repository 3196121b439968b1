#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "inverto/core.hpp"
#include "inverto/limits.hpp"

namespace inverto {

using Rational = boost::multiprecision::cpp_rational;

/// Point q + sum_{i<m} f(i) * sqrt(p_i) of the chain Q(m), p_i the i-th prime.
struct WVertex {
    int m = 0;
    std::uint32_t f = 0;  // bit i is f(i)
    Rational q;

    bool operator==(const WVertex&) const = default;
    std::string to_string() const;
};

/// The first m primes (2, 3, 5, ...).
std::vector<int> first_primes(int m);

/// Exact order of the real values of u and v. When `precision_bits` is
/// given it receives the enclosure precision that certified the answer
/// (0 when the answer was decided on rationals alone).
std::strong_ordering alpha_compare(const WVertex& u, const WVertex& v, int* precision_bits = nullptr);

/// Finite piece of C(m) and its inversion W(m).
struct WSample {
    int m = 0;
    /// Vertices in increasing value order; position i is tournament vertex i.
    std::vector<WVertex> chain;
    /// The chain as a transitive tournament with X_i = {v : f(i) = 1}.
    AnnotatedTournament annotated{Tournament(), InversionSequence()};
    /// Inv(chain, (X_i)).
    Tournament tournament;
};

WSample build_W_sample(int m, std::vector<WVertex> vertices);

/// q ranges over {0, ..., q_count-1} for every f.
std::vector<WVertex> default_sample_vertices(int m, int q_count);

/// Lines "f-bits q" with q an integer or num/den; f-bits has m characters
/// (bit i first), or "-" when m = 0. Blank lines and '#' comments skipped.
std::vector<WVertex> parse_sample_spec(std::istream& in, int m);

struct UniversalityReport {
    int m = 0;
    int k = 0;
    int sample_size = 0;
    int classes_checked = 0;
    int classes_embedded = 0;
    /// Canonical codes of classes with index <= m that do not embed.
    std::vector<std::string> missing;
    /// Largest index among the embedded classes.
    int max_index_witnessed = 0;
    bool passed = false;
};

/// Checks that every class of order <= k with index <= m embeds in the
/// sample tournament. Desk caps: m <= 2, k <= 5.
UniversalityReport universality_check(int m, int k, const WSample& sample, const Limits& limits = {});

struct Escalation {
    UniversalityReport report;
    int q_count = 0;
};

/// Grows the default sample one q value at a time until the check passes
/// or the sample would exceed max_points.
Escalation escalate_universality(int m, int k, int max_points, const Limits& limits = {});

}  // namespace inverto
