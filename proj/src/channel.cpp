#include "paircode/channel.hpp"

#include <chrono>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "paircode/detail/splitmix.hpp"

namespace paircode {

PairVector transmit(const BinaryWord& c, const ChannelConfig& cfg) {
    if (cfg.t < 0) raise(ErrorKind::DomainError, "t must be nonnegative");
    const std::size_t n = c.size();
    PairVector y = pair_read(c);
    std::mt19937_64 rng(cfg.seed);
    const int cap = static_cast<int>(std::min<std::size_t>(cfg.t, n));
    int count = cap;
    if (cfg.mode == ErrorMode::UpToT && cap > 0) count = std::uniform_int_distribution<int>(0, cap)(rng);
    // Partial Fisher-Yates draw of `count` distinct positions.
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    for (int i = 0; i < count; ++i) {
        const std::size_t j = std::uniform_int_distribution<std::size_t>(i, n - 1)(rng);
        std::swap(pos[i], pos[j]);
        const auto [l, r] = y.pair(pos[i]);
        const int cur = (l ? 1 : 0) | (r ? 2 : 0);
        const int sym = (cur + 1 + std::uniform_int_distribution<int>(0, 2)(rng)) & 3;
        y.set_pair(pos[i], sym & 1, sym & 2);
    }
    return y;
}

namespace {

struct PackedTarget {
    std::uint64_t left = 0;
    std::uint64_t right = 0;
    unsigned n = 0;
};

PackedTarget pack_target(const PairVector& y) {
    if (y.size() > 64) raise(ErrorKind::TooLarge, "decoder is guarded at n <= 64");
    return {y.left().value(), y.right().value(), static_cast<unsigned>(y.size())};
}

inline int raw_distance(std::uint64_t enc, const PackedTarget& y) {
    return std::popcount(((enc ^ y.left) | (bits::rotr1(enc, y.n) ^ y.right)) & bits::mask(y.n));
}

struct BestTracker {
    int best = -1;
    int best_class = -1;
    bool ambiguous = false;

    void offer(int dist, int cls) {
        if (best < 0 || dist < best) {
            best = dist;
            best_class = cls;
            ambiguous = false;
        } else if (dist == best && cls != best_class) {
            ambiguous = true;
        }
    }
};

DecodeResult finish(const BestTracker& tr, const FunctionTable& f) {
    DecodeResult res;
    res.status = tr.ambiguous ? DecodeStatus::Ambiguous : DecodeStatus::Ok;
    res.value = f.image()[tr.best_class];
    res.distance = tr.best;
    return res;
}

void check_decode_preconditions(const PairVector& y, const PairEncoder& enc, const FunctionTable& f) {
    if (enc.k() != f.k()) raise(ErrorKind::SizeMismatch, "encoder and function disagree on k");
    if (y.size() != static_cast<std::size_t>(enc.k() + enc.r()))
        raise(ErrorKind::LengthMismatch, "received vector must have length k + r");
    if (f.k() > 20) raise(ErrorKind::TooLarge, "nearest-message decoding is guarded at k <= 20");
}

}  // namespace

DecodeResult decode_function(const PairVector& y, const PairEncoder& enc, const FunctionTable& f) {
    check_decode_preconditions(y, enc, f);
    const PackedTarget target = pack_target(y);
    BestTracker tr;
    for (std::uint64_t u = 0; u < f.domain_size(); ++u)
        tr.offer(raw_distance(enc.encode_value(u), target), f.class_index_of_message(u));
    return finish(tr, f);
}

DecodeResult decode_function_fast(const PairVector& y, const PairEncoder& enc, const FunctionTable& f) {
    check_decode_preconditions(y, enc, f);
    const PackedTarget target = pack_target(y);
    const unsigned k = static_cast<unsigned>(f.k());
    const std::uint64_t interior = bits::mask(k - 1);  // pairs made of message bits only
    BestTracker tr;
    for (std::uint64_t u = 0; u < f.domain_size(); ++u) {
        const std::uint64_t mism = ((u ^ target.left) | ((u >> 1) ^ target.right)) & interior;
        const int lb = std::popcount(mism);
        if (tr.best >= 0 && lb > tr.best) continue;  // cannot beat or tie the current best
        tr.offer(raw_distance(enc.encode_value(u), target), f.class_index_of_message(u));
    }
    return finish(tr, f);
}

namespace {

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("PAIRCODE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < 256) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return static_cast<int>(hw);
}

}  // namespace

ExperimentStats round_trip_experiment(const FunctionTable& f, const PairEncoder& enc, const ChannelConfig& cfg,
                                      std::uint64_t trials) {
    if (enc.k() != f.k()) raise(ErrorKind::SizeMismatch, "encoder and function disagree on k");
    ExperimentStats stats;
    stats.trials = trials;
    stats.t = cfg.t;
    stats.k = enc.k();
    stats.r = enc.r();
    stats.family = to_string(enc.family());
    stats.seed = cfg.seed;
    const auto start = std::chrono::steady_clock::now();

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t& ok, std::uint64_t& amb) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            const std::uint64_t trial_seed = detail::derive_seed(cfg.seed, i);
            std::mt19937_64 rng(trial_seed);
            const std::uint64_t u = std::uniform_int_distribution<std::uint64_t>(0, f.domain_size() - 1)(rng);
            ChannelConfig trial_cfg{cfg.t, cfg.mode, detail::derive_seed(trial_seed, 0xC0DE)};
            const PairVector y = transmit(enc.encode(BinaryWord::from_value(u, f.k())), trial_cfg);
            const DecodeResult dec = decode_function_fast(y, enc, f);
            if (dec.status == DecodeStatus::Ambiguous)
                ++amb;
            else if (dec.value == f.eval(u))
                ++ok;
        }
    };

    const int workers = trials >= 512 ? worker_count() : 1;
    if (workers <= 1) {
        run_range(0, trials, stats.successes, stats.ambiguous);
    } else {
        std::vector<std::uint64_t> ok(workers, 0), amb(workers, 0);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                run_range(w * chunk, std::min(trials, (w + 1) * chunk), ok[w], amb[w]);
            });
        for (auto& th : pool) th.join();
        stats.successes = std::accumulate(ok.begin(), ok.end(), std::uint64_t{0});
        stats.ambiguous = std::accumulate(amb.begin(), amb.end(), std::uint64_t{0});
    }
    stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return stats;
}

ExhaustiveRoundTrip exhaustive_round_trip(const FunctionTable& f, const PairEncoder& enc, int t) {
    if (enc.k() != f.k()) raise(ErrorKind::SizeMismatch, "encoder and function disagree on k");
    if (f.k() > 14) raise(ErrorKind::TooLarge, "exhaustive round trip is guarded at k <= 14");
    if (t < 0) raise(ErrorKind::DomainError, "t must be nonnegative");
    const unsigned n = static_cast<unsigned>(enc.k() + enc.r());
    if (n > 64) raise(ErrorKind::TooLarge, "exhaustive round trip is guarded at k + r <= 64");
    ExhaustiveRoundTrip result;

    std::vector<std::size_t> positions(t, 0);
    for (std::uint64_t u = 0; u < f.domain_size(); ++u) {
        const std::uint64_t encv = enc.encode_value(u);
        const std::uint64_t el = encv;
        const std::uint64_t er = bits::rotr1(encv, n);
        const std::int64_t truth = f.eval(u);

        // Enumerate weight-c position sets for c <= t, then all 3^c symbol substitutions.
        auto run_pattern = [&](int c) {
            std::vector<int> alt(c, 0);
            while (true) {
                std::uint64_t yl = el, yr = er;
                for (int j = 0; j < c; ++j) {
                    const std::size_t p = positions[j];
                    const int cur = static_cast<int>((yl >> p) & 1) | (static_cast<int>((yr >> p) & 1) << 1);
                    const int sym = (cur + 1 + alt[j]) & 3;
                    yl = (yl & ~(1ULL << p)) | (static_cast<std::uint64_t>(sym & 1) << p);
                    yr = (yr & ~(1ULL << p)) | (static_cast<std::uint64_t>((sym >> 1) & 1) << p);
                }
                const PairVector y(BinaryWord::from_value(yl, n), BinaryWord::from_value(yr, n));
                const DecodeResult dec = decode_function_fast(y, enc, f);
                ++result.trials;
                if (dec.status != DecodeStatus::Ok || dec.value != truth) ++result.failures;
                int j = c - 1;
                while (j >= 0 && alt[j] == 2) alt[j--] = 0;
                if (j < 0) break;
                ++alt[j];
            }
        };

        auto choose = [&](auto&& self, int c, int depth, std::size_t from) -> void {
            if (depth == c) {
                run_pattern(c);
                return;
            }
            for (std::size_t p = from; p < n; ++p) {
                positions[depth] = p;
                self(self, c, depth + 1, p + 1);
            }
        };
        for (int c = 0; c <= std::min<int>(t, static_cast<int>(n)); ++c) choose(choose, c, 0, 0);
    }
    return result;
}

}  // namespace paircode
