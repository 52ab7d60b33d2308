#include "hodgelab/lemma46.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>

namespace hodgelab {

LambdaProfile lambda_profile(long d, const std::vector<long>& m) {
    if (d < 1) throw InputError("lambda profile needs d >= 1");
    long sum = 0;
    for (long v : m) {
        if (v < 1) throw InputError("lambda profile parts must be positive");
        sum += v;
    }
    if (sum != d) throw InputError("lambda profile parts must sum to d");

    LambdaProfile p;
    p.d = d;
    p.m = m;
    p.lambda.reserve(static_cast<std::size_t>(d - 1));
    for (long i = 1; i <= d - 1; ++i) {
        long s = 0;
        for (long v : m) s += (i * v) % d;
        if (s % d != 0) throw InconsistencyError("remainder sum not a multiple of d");
        long lam = s / d;
        p.lambda.push_back(lam);
        if (lam == 1) ++p.count_ones;
    }
    return p;
}

namespace {

std::uint64_t binom(long n, long k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (long i = 1; i <= k; ++i) {
        // r * (n - k + i) / i is always integral at this step
        __uint128_t t = static_cast<__uint128_t>(r) * static_cast<std::uint64_t>(n - k + i);
        t /= static_cast<std::uint64_t>(i);
        if (t > cap) return cap + 1;
        r = static_cast<std::uint64_t>(t);
    }
    return r;
}

// Compositions of d into r positive parts are cut-point subsets of size r-1
// in {0,...,d-2}, enumerated in colexicographic order.
struct CompositionCursor {
    long d;
    long r;
    std::vector<long> cuts;  // 0-based, strictly increasing

    void unrank(std::uint64_t rank) {
        cuts.assign(static_cast<std::size_t>(r - 1), 0);
        for (long i = r - 1; i >= 1; --i) {
            long c = i - 1;
            while (binom(c + 1, i, UINT64_MAX - 1) <= rank) ++c;
            cuts[static_cast<std::size_t>(i - 1)] = c;
            rank -= binom(c, i, UINT64_MAX - 1);
        }
    }

    void advance() {
        const std::size_t k = cuts.size();
        for (std::size_t i = 0; i < k; ++i) {
            if (i + 1 == k || cuts[i] + 1 < cuts[i + 1]) {
                ++cuts[i];
                for (std::size_t j = 0; j < i; ++j) cuts[j] = static_cast<long>(j);
                return;
            }
        }
    }

    void parts(std::vector<long>& m) const {
        m.resize(static_cast<std::size_t>(r));
        long prev = 0;
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            m[i] = cuts[i] + 1 - prev;
            prev = cuts[i] + 1;
        }
        m[static_cast<std::size_t>(r - 1)] = d - prev;
    }
};

long count_lambda_ones(long d, const std::vector<long>& m) {
    long count = 0;
    for (long i = 1; i <= d - 1; ++i) {
        long s = 0;
        for (long v : m) {
            s += (i * v) % d;
            if (s > d) break;  // only the exact value d matters
        }
        if (s == d) ++count;
    }
    return count;
}

struct Block {
    long d;
    long r;
    std::uint64_t count;   // compositions in this block
    std::uint64_t offset;  // global index of the first one
};

struct ChunkResult {
    std::uint64_t checked = 0;
    std::vector<SweepViolation> violations;
};

ChunkResult run_range(const std::vector<Block>& blocks, std::uint64_t begin, std::uint64_t end) {
    ChunkResult res;
    std::vector<long> m;
    for (const Block& b : blocks) {
        std::uint64_t lo = std::max(begin, b.offset);
        std::uint64_t hi = std::min(end, b.offset + b.count);
        if (lo >= hi) continue;
        CompositionCursor cur{b.d, b.r, {}};
        cur.unrank(lo - b.offset);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            cur.parts(m);
            long ones = count_lambda_ones(b.d, m);
            ++res.checked;
            if (2 * ones >= b.d - 1) res.violations.push_back({b.d, b.r, m, ones});
            if (idx + 1 < hi) cur.advance();
        }
    }
    return res;
}

}  // namespace

SweepReport verify_bound(long d_max, const std::vector<long>& r_values, int jobs,
                         std::uint64_t guard) {
    auto start = std::chrono::steady_clock::now();
    if (jobs < 1) jobs = 1;

    std::vector<long> rs = r_values;
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    rs.erase(std::remove_if(rs.begin(), rs.end(), [](long r) { return r < 4; }), rs.end());

    std::vector<Block> blocks;
    std::uint64_t total = 0;
    for (long r : rs) {
        for (long d = r; d <= d_max; ++d) {
            std::uint64_t n = binom(d - 1, r - 1, guard);
            if (n == 0) continue;
            total += n;
            if (total > guard)
                throw CapacityError("lemma 4.6 sweep guard exceeded; raise HODGELAB_GUARD");
            blocks.push_back({d, r, n, total - n});
        }
    }

    SweepReport report;
    if (total == 0) return report;

    int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total));
    std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<ChunkResult> results(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
        std::uint64_t end = std::min(total, begin + chunk);
        pool.emplace_back([&, w, begin, end] { results[static_cast<std::size_t>(w)] = run_range(blocks, begin, end); });
    }
    for (auto& t : pool) t.join();

    for (const auto& r : results) {
        report.checked += r.checked;
        report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    report.wall_time_ms =
        static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    return report;
}

ZeroLinkReport zero_character_link(const CoverSpec& spec) {
    if (spec.group.rank() != 1) throw InputError("zero-character link requires a cyclic group");
    if (spec.quotient_genus != 0)
        throw InputError("zero-character link requires a rational quotient");

    ZeroLinkReport rep;
    long d = spec.group.factor_orders[0];
    rep.d = d;

    EigenTable table = eigentable(spec);
    for (long i = 1; i <= d - 1; ++i) {
        if (table.dim(Character{{i}}) == 0) ++rep.zero_eigenspace_count;
        long s = 0;
        for (const auto& bp : spec.branch) s += (i * bp.monodromy.residues[0]) % d;
        if (s == d) ++rep.lambda_one_count;
    }
    rep.link_holds = (rep.zero_eigenspace_count == rep.lambda_one_count);

    long r = static_cast<long>(spec.branch.size());
    if (r >= 4) {
        rep.bound_holds = (2 * rep.zero_eigenspace_count < d - 1);
        long mono_sum = 0;
        for (const auto& bp : spec.branch) mono_sum += bp.monodromy.residues[0];
        if (mono_sum != d)
            rep.notes.push_back("monodromies sum to " + std::to_string(mono_sum) +
                                " > d: bound observed, not backed by the counting lemma");
        if (!*rep.bound_holds)
            rep.notes.push_back("zero-eigenspace count reaches (d-1)/2");
    } else {
        rep.notes.push_back("fewer than 4 branch points: counting bound not asserted");
    }
    if (!rep.link_holds) rep.notes.push_back("vanishing set does not match the remainder-sum count");
    return rep;
}

}  // namespace hodgelab
