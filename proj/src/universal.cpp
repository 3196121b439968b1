#include "inverto/universal.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include <boost/multiprecision/integer.hpp>

#include "inverto/hereditary.hpp"
#include "inverto/index.hpp"

namespace inverto {

using boost::multiprecision::cpp_int;

namespace {

constexpr int kMaxAlphaCount = 31;
constexpr int kMaxUniversalM = 2;
constexpr int kMaxUniversalK = 5;

void check_m(int m) {
    if (m < 0 || m > kMaxAlphaCount)
        throw InvalidArgument("m must lie in [0, " + std::to_string(kMaxAlphaCount) + "]");
}

}  // namespace

std::string WVertex::to_string() const {
    std::string bits;
    for (int i = 0; i < m; ++i) bits += (f >> i) & 1u ? '1' : '0';
    if (bits.empty()) bits = "-";
    std::ostringstream os;
    os << bits << ' ' << q;
    return os.str();
}

std::vector<int> first_primes(int m) {
    std::vector<int> primes;
    for (int c = 2; static_cast<int>(primes.size()) < m; ++c) {
        bool prime = true;
        for (int p : primes) {
            if (p * p > c) break;
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(c);
    }
    return primes;
}

std::strong_ordering alpha_compare(const WVertex& u, const WVertex& v, int* precision_bits) {
    if (u.m != v.m) throw InvalidArgument("alpha_compare: m mismatch");
    check_m(u.m);
    if (precision_bits) *precision_bits = 0;
    const Rational dq = u.q - v.q;
    if (u.f == v.f) {
        const int sign = dq.sign();
        return sign < 0 ? std::strong_ordering::less
                        : (sign > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // The difference dq + sum d_i sqrt(p_i) is nonzero because 1 and the
    // square roots of distinct primes are rationally independent, so the
    // enclosure eventually excludes zero.
    const auto primes = first_primes(u.m);
    for (int k = 16;; k *= 2) {
        const cpp_int scale = cpp_int(1) << k;
        Rational lo = dq, hi = dq;
        for (int i = 0; i < u.m; ++i) {
            const int d = static_cast<int>((u.f >> i) & 1u) - static_cast<int>((v.f >> i) & 1u);
            if (d == 0) continue;
            const cpp_int s = boost::multiprecision::sqrt(cpp_int(primes[i]) << (2 * k));
            const Rational below(s, scale), above(s + 1, scale);
            if (d > 0) {
                lo += below;
                hi += above;
            } else {
                lo -= above;
                hi -= below;
            }
        }
        if (lo > 0 || hi < 0) {
            if (precision_bits) *precision_bits = k;
            return lo > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
}

WSample build_W_sample(int m, std::vector<WVertex> vertices) {
    check_m(m);
    if (static_cast<int>(vertices.size()) > kMaxOrder)
        throw ResourceLimit("sample too large", kMaxOrder);
    for (const auto& v : vertices) {
        if (v.m != m) throw InvalidArgument("sample vertex has wrong m");
        if (m < 32 && (v.f >> m) != 0) throw InvalidArgument("f has bits beyond m");
    }
    std::sort(vertices.begin(), vertices.end(),
              [](const WVertex& a, const WVertex& b) { return alpha_compare(a, b) < 0; });
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (alpha_compare(vertices[i - 1], vertices[i]) == 0)
            throw InvalidArgument("duplicate sample vertex " + vertices[i].to_string());

    const int k = static_cast<int>(vertices.size());
    InversionSequence sets(k);
    for (int i = 0; i < m; ++i) {
        std::uint64_t mask = 0;
        for (int p = 0; p < k; ++p)
            if ((vertices[p].f >> i) & 1u) mask |= bit(p);
        sets.push_back(VertexSet::from_mask(k, mask));
    }
    WSample sample;
    sample.m = m;
    sample.chain = std::move(vertices);
    sample.annotated = AnnotatedTournament(chain(k), sets);
    sample.tournament = invert_seq(sample.annotated.tournament, sets);
    return sample;
}

std::vector<WVertex> default_sample_vertices(int m, int q_count) {
    check_m(m);
    if (q_count < 0) throw InvalidArgument("q_count must be non-negative");
    std::vector<WVertex> out;
    for (std::uint32_t f = 0; f < (1u << m); ++f)
        for (int q = 0; q < q_count; ++q) out.push_back({m, f, Rational(q)});
    return out;
}

std::vector<WVertex> parse_sample_spec(std::istream& in, int m) {
    check_m(m);
    std::vector<WVertex> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string fbits, qtext, extra;
        if (!(fields >> fbits)) continue;
        if (!(fields >> qtext) || (fields >> extra))
            throw ParseError("expected 'f-bits q' on line " + std::to_string(line_no), line_no);
        WVertex v;
        v.m = m;
        if (fbits == "-") {
            if (m != 0) throw ParseError("'-' is only valid for m = 0", line_no);
        } else {
            if (static_cast<int>(fbits.size()) != m)
                throw ParseError("f-bits must have " + std::to_string(m) + " characters", line_no);
            for (int i = 0; i < m; ++i) {
                if (fbits[i] == '1')
                    v.f |= 1u << i;
                else if (fbits[i] != '0')
                    throw ParseError("f-bits must be binary", line_no);
            }
        }
        const auto slash = qtext.find('/');
        auto parse_int = [&](const std::string& s) {
            std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (start == s.size() ||
                !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("malformed rational '" + qtext + "'", line_no);
            return cpp_int(s);
        };
        if (slash == std::string::npos) {
            v.q = Rational(parse_int(qtext));
        } else {
            cpp_int den = parse_int(qtext.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator", line_no);
            v.q = Rational(parse_int(qtext.substr(0, slash)), den);
        }
        out.push_back(std::move(v));
    }
    return out;
}

UniversalityReport universality_check(int m, int k, const WSample& sample, const Limits& limits) {
    if (m < 0 || m > kMaxUniversalM) throw ResourceLimit("universality check refused for m", kMaxUniversalM);
    if (k < 1 || k > kMaxUniversalK) throw ResourceLimit("universality check refused for k", kMaxUniversalK);
    if (sample.m != m) throw InvalidArgument("sample was built for a different m");
    UniversalityReport report;
    report.m = m;
    report.k = k;
    report.sample_size = sample.tournament.order();
    for (int n = 1; n <= k; ++n) {
        const auto& catalog = enumerate(n, limits);
        const auto& table = index_all(n, limits);
        for (std::size_t i = 0; i < catalog.classes.size(); ++i) {
            const int idx = table.index_of(catalog.classes[i].packed);
            if (idx > m) continue;
            ++report.classes_checked;
            if (embeds(catalog.tournament(i), sample.tournament)) {
                ++report.classes_embedded;
                report.max_index_witnessed = std::max(report.max_index_witnessed, idx);
            } else {
                report.missing.push_back(catalog.classes[i].code);
            }
        }
    }
    report.passed = report.missing.empty();
    return report;
}

Escalation escalate_universality(int m, int k, int max_points, const Limits& limits) {
    Escalation out;
    for (int q_count = 1; q_count * (1 << m) <= max_points; ++q_count) {
        out.q_count = q_count;
        out.report = universality_check(m, k, build_W_sample(m, default_sample_vertices(m, q_count)), limits);
        if (out.report.passed) break;
    }
    return out;
}

}  // namespace inverto
