#include "paircode/fcspc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace paircode {

namespace {

int clamp_pos(int x) { return x > 0 ? x : 0; }

}  // namespace

DistanceMatrix build_message_matrix(const FunctionTable& f, int t, std::span<const BinaryWord> msgs, int kind) {
    if (kind != 1 && kind != 2) raise(ErrorKind::DomainError, "matrix kind must be 1 or 2");
    if (t < 0) raise(ErrorKind::DomainError, "t must be nonnegative");
    std::set<BinaryWord> seen(msgs.begin(), msgs.end());
    if (seen.size() != msgs.size()) raise(ErrorKind::DuplicateMessage, "message list contains duplicates");
    const int m = static_cast<int>(msgs.size());
    const int offset = kind == 1 ? 2 * t : 2 * t + 2;
    DistanceMatrix d = DistanceMatrix::zero(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (f.eval_word(msgs[i]) == f.eval_word(msgs[j])) continue;
            d.set(i, j, clamp_pos(offset - pair_distance(msgs[i], msgs[j])));
        }
    return d;
}

DistanceMatrix build_function_matrix(const FunctionTable& f, int t, int kind) {
    if (kind != 1 && kind != 2) raise(ErrorKind::DomainError, "matrix kind must be 1 or 2");
    if (t < 0) raise(ErrorKind::DomainError, "t must be nonnegative");
    const int e = f.image_size();
    if (e > 64) raise(ErrorKind::TooLarge, "function matrices are guarded at |Im(f)| <= 64");
    const int offset = kind == 1 ? 2 * t : 2 * t + 2;
    DistanceMatrix d = DistanceMatrix::zero(e);
    for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j)
            d.set(i, j, clamp_pos(offset - function_pair_distance(f, f.image()[i], f.image()[j])));
    return d;
}

DistanceMatrix closed_form_weight_matrix(int k, int t, int kind) {
    if (k < 2) raise(ErrorKind::DomainError, "closed-form matrices require k >= 2");
    if (t < 0) raise(ErrorKind::DomainError, "t must be nonnegative");
    if (kind != 1 && kind != 2) raise(ErrorKind::DomainError, "matrix kind must be 1 or 2");
    DistanceMatrix d = DistanceMatrix::zero(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const int diff = j - i;
            if (kind == 2)
                d.set(i, j, diff == 1 ? 2 * t : clamp_pos(2 * t + 2 - diff));
            else
                d.set(i, j, clamp_pos(2 * t - diff - 1));
        }
    return d;
}

const char* to_string(EncoderFamily f) {
    switch (f) {
        case EncoderFamily::Weight: return "weight";
        case EncoderFamily::Dist: return "dist";
        case EncoderFamily::Locally: return "locally";
        case EncoderFamily::Generic: return "generic";
    }
    return "generic";
}

EncoderFamily encoder_family_from_string(const std::string& s) {
    if (s == "weight") return EncoderFamily::Weight;
    if (s == "dist") return EncoderFamily::Dist;
    if (s == "locally") return EncoderFamily::Locally;
    if (s == "generic") return EncoderFamily::Generic;
    raise(ErrorKind::ParseError, "unknown encoder family: " + s);
}

BinaryWord PairEncoder::parity(const BinaryWord& u) const {
    if (static_cast<int>(u.size()) != k_) raise(ErrorKind::LengthMismatch, "message length must be k");
    if (r_ == 0) raise(ErrorKind::DomainError, "encoder has no parity bits");
    return BinaryWord::from_value(parity_value(u.value()), static_cast<std::size_t>(r_));
}

std::uint64_t PairEncoder::parity_value(std::uint64_t u) const {
    if (r_ == 0) return 0;
    switch (family_) {
        case EncoderFamily::Weight: {
            const int w = bits::pair_weight(u, static_cast<unsigned>(k_));
            return base_[smod(w + 1, 2 * t_ + 1) - 1].value();
        }
        case EncoderFamily::Dist: {
            const int w = bits::pair_weight(u, static_cast<unsigned>(k_));
            const int i = smod(w + 1, dist_T_);
            if (i >= 2 * t_ + 2) return bits::mask(static_cast<unsigned>(2 * t_));
            return bits::mask(static_cast<unsigned>(i - 1));  // 1^(i-1) 0^(2t-i+1)
        }
        case EncoderFamily::Locally:
            return locally_bits_[u] ? bits::mask(static_cast<unsigned>(r_)) : 0;
        case EncoderFamily::Generic: {
            const auto it = class_parity_.find(table_->eval(u));
            if (it == class_parity_.end()) raise(ErrorKind::ValueNotInImage, "no parity for this function value");
            return it->second.value();
        }
    }
    raise(ErrorKind::DomainError, "invalid encoder family");
}

BinaryWord PairEncoder::encode(const BinaryWord& u) const {
    if (r_ == 0) return u;
    return concat(u, parity(u));
}

std::uint64_t PairEncoder::encode_value(std::uint64_t u) const {
    if (k_ + r_ > 64) raise(ErrorKind::TooLarge, "packed encoding requires k + r <= 64");
    return u | (parity_value(u) << k_);
}

PairEncoder PairEncoder::weight_encoder(int k, int t, std::vector<BinaryWord> base) {
    if (k < 2 || t < 1) raise(ErrorKind::DomainError, "weight encoder requires k >= 2, t >= 1");
    if (static_cast<int>(base.size()) != 2 * t + 1)
        raise(ErrorKind::BadBaseCode, "base code must have exactly 2t+1 words");
    for (const auto& w : base)
        if (w.size() != base[0].size()) raise(ErrorKind::BadBaseCode, "base codewords must share one length");
    if (base[0].size() > 64) raise(ErrorKind::TooLarge, "base codewords are guarded at length <= 64");
    if (min_pair_distance(base) < 2 * t) raise(ErrorKind::BadBaseCode, "base code needs minimum pair distance 2t");
    PairEncoder e;
    e.family_ = EncoderFamily::Weight;
    e.k_ = k;
    e.t_ = t;
    e.r_ = static_cast<int>(base[0].size());
    e.base_ = std::move(base);
    return e;
}

PairEncoder PairEncoder::identity_encoder(int k, int t) {
    if (k < 1 || t < 0) raise(ErrorKind::DomainError, "identity encoder requires k >= 1, t >= 0");
    PairEncoder e;
    e.family_ = EncoderFamily::Generic;
    e.k_ = k;
    e.t_ = t;
    e.r_ = 0;
    return e;
}

PairEncoder PairEncoder::dist_encoder(int k, int t, int T) {
    if (k < 2 || t < 1) raise(ErrorKind::DomainError, "dist encoder requires k >= 2, t >= 1");
    if ((k + 1) % T != 0) raise(ErrorKind::DomainError, "T must divide k+1");
    if (T < 2 * t + 1) raise(ErrorKind::DomainError, "T must be at least 2t+1");
    PairEncoder e;
    e.family_ = EncoderFamily::Dist;
    e.k_ = k;
    e.t_ = t;
    e.r_ = 2 * t;
    e.dist_T_ = T;
    return e;
}

PairEncoder PairEncoder::locally_encoder(int k, int t, std::vector<std::uint8_t> bits) {
    if (k < 1 || t < 1) raise(ErrorKind::DomainError, "locally encoder requires k >= 1, t >= 1");
    if (bits.size() != (1ULL << k)) raise(ErrorKind::SizeMismatch, "bit table must cover all messages");
    PairEncoder e;
    e.family_ = EncoderFamily::Locally;
    e.k_ = k;
    e.t_ = t;
    e.r_ = 2 * t - 1;
    e.locally_bits_ = std::move(bits);
    return e;
}

PairEncoder PairEncoder::class_encoder(int k, int t, std::map<std::int64_t, BinaryWord> parities,
                                       std::shared_ptr<const FunctionTable> f) {
    if (!f || f->k() != k) raise(ErrorKind::SizeMismatch, "class encoder needs its function table");
    if (parities.empty()) raise(ErrorKind::DomainError, "class encoder needs at least one parity");
    const std::size_t r = parities.begin()->second.size();
    for (const auto& [v, p] : parities)
        if (p.size() != r) raise(ErrorKind::LengthMismatch, "class parities must share one length");
    PairEncoder e;
    e.family_ = EncoderFamily::Generic;
    e.k_ = k;
    e.t_ = t;
    e.r_ = static_cast<int>(r);
    e.class_parity_ = std::move(parities);
    e.table_ = std::move(f);
    return e;
}

std::vector<BinaryWord> builtin_pair_base(int t) {
    auto words = [](std::initializer_list<const char*> ss) {
        std::vector<BinaryWord> v;
        for (const char* s : ss) v.push_back(BinaryWord::from_string(s));
        return v;
    };
    switch (t) {
        case 1: return words({"00", "10", "01"});
        case 2: return words({"00000", "11100", "10110", "11001", "01111"});
        case 3: return words({"0001100", "0011011", "0100010", "0110101", "1000111", "1010000", "1101001"});
        default: raise(ErrorKind::DomainError, "built-in base codes exist for t in {1,2,3}");
    }
}

PairEncoder encode_pair_weight(int k, int t, std::optional<std::vector<BinaryWord>> base) {
    return PairEncoder::weight_encoder(k, t, base ? std::move(*base) : builtin_pair_base(t));
}

PairEncoder encode_weight_distribution(int k, int t, int T) { return PairEncoder::dist_encoder(k, t, T); }

PairEncoder encode_locally_binary(const FunctionTable& f, int t) {
    if (t < 1) raise(ErrorKind::DomainError, "locally-binary construction requires t >= 1");
    if (!is_pair_locally_binary(f, 2 * t))
        raise(ErrorKind::NotPairLocallyBinary, "function is not 2t-pair-locally binary");
    const unsigned n = static_cast<unsigned>(f.k());
    std::vector<std::uint64_t> shell;
    for (std::uint64_t z = 0; z < f.domain_size(); ++z)
        if (bits::pair_weight(z, n) <= 2 * t) shell.push_back(z);
    std::vector<std::uint8_t> bit(f.domain_size());
    for (std::uint64_t u = 0; u < f.domain_size(); ++u) {
        std::int64_t best = f.eval(u);
        for (const std::uint64_t z : shell) best = std::max(best, f.eval(u ^ z));
        bit[u] = f.eval(u) == best ? 1 : 0;
    }
    return PairEncoder::locally_encoder(f.k(), t, std::move(bit));
}

PairEncoder class_encoder_from_witness(const FunctionTable& f, int t, std::span<const BinaryWord> witness) {
    if (static_cast<int>(witness.size()) != f.image_size())
        raise(ErrorKind::SizeMismatch, "need one parity per function value");
    std::map<std::int64_t, BinaryWord> parities;
    for (int i = 0; i < f.image_size(); ++i) parities.emplace(f.image()[i], witness[i]);
    return PairEncoder::class_encoder(f.k(), t, std::move(parities),
                                      std::make_shared<FunctionTable>(f));
}

VerifyResult verify_fcspc(const PairEncoder& enc, const FunctionTable& f, int t, const VerifyOptions& opts) {
    if (enc.k() != f.k()) raise(ErrorKind::SizeMismatch, "encoder and function disagree on k");
    if (t < 0) raise(ErrorKind::DomainError, "t must be nonnegative");
    const int k = f.k();
    const unsigned n = static_cast<unsigned>(k + enc.r());
    VerifyResult res;
    if (opts.exhaustive) {
        if (k > 14) raise(ErrorKind::TooLarge, "exhaustive verification is guarded at k <= 14");
        std::vector<std::uint64_t> encoded(f.domain_size());
        for (std::uint64_t u = 0; u < f.domain_size(); ++u) encoded[u] = enc.encode_value(u);
        res.exhaustive = true;
        // Only pairs from distinct function classes constrain the encoder.
        for (int a = 0; a < f.image_size(); ++a)
            for (int b = a + 1; b < f.image_size(); ++b)
                for (const std::uint64_t u1 : f.class_members(a))
                    for (const std::uint64_t u2 : f.class_members(b)) {
                        ++res.pairs_checked;
                        if (bits::pair_distance(encoded[u1], encoded[u2], n) < 2 * t + 1) {
                            res.ok = false;
                            res.counterexample = {BinaryWord::from_value(u1, k), BinaryWord::from_value(u2, k)};
                            return res;
                        }
                    }
        res.ok = true;
        return res;
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> draw(0, f.domain_size() - 1);
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
        const std::uint64_t u1 = draw(rng), u2 = draw(rng);
        if (f.eval(u1) == f.eval(u2)) continue;
        ++res.pairs_checked;
        if (bits::pair_distance(enc.encode_value(u1), enc.encode_value(u2), n) < 2 * t + 1) {
            res.ok = false;
            res.counterexample = {BinaryWord::from_value(u1, k), BinaryWord::from_value(u2, k)};
            return res;
        }
    }
    res.ok = true;  // "no violation found in N samples" — never a validity proof
    res.exhaustive = false;
    return res;
}

double RedundancyReport::best_lower() const {
    double b = 0;
    for (const auto& e : lower) b = std::max(b, e.value);
    return b;
}

double RedundancyReport::best_upper() const {
    double b = std::numeric_limits<double>::infinity();
    for (const auto& e : upper) b = std::min(b, e.value);
    return b;
}

std::vector<BinaryWord> representative_subset(const FunctionTable& f) {
    const unsigned n = static_cast<unsigned>(f.k());
    std::vector<std::uint64_t> reps;
    for (int c = 0; c < f.image_size(); ++c) {
        const auto& members = f.class_members(c);
        std::uint64_t best = members.front();
        long long best_cost = -1;
        for (const std::uint64_t cand : members) {
            long long cost = 0;
            for (const std::uint64_t r : reps) cost += bits::pair_distance(cand, r, n);
            if (best_cost < 0 || cost < best_cost || (cost == best_cost && cand < best)) {
                best = cand;
                best_cost = cost;
            }
        }
        reps.push_back(best);
    }
    std::vector<BinaryWord> out;
    out.reserve(reps.size());
    for (const std::uint64_t r : reps) out.push_back(BinaryWord::from_value(r, f.k()));
    return out;
}

namespace {

void try_achieved(RedundancyReport& report, const FunctionTable& f, int t, const PairEncoder& enc) {
    if (f.k() <= 14) {
        const VerifyResult v = verify_fcspc(enc, f, t);
        if (v.ok) {
            if (!report.achieved || enc.r() < *report.achieved) report.achieved = enc.r();
            return;
        }
        report.notes.push_back(std::string("constructed ") + to_string(enc.family()) +
                               " encoder failed verification (unexpected)");
    } else {
        report.notes.push_back("k too large for exhaustive verification; achieved r not certified");
    }
}

}  // namespace

RedundancyReport redundancy_report(const FunctionTable& f, int t, const ReportOptions& opts) {
    if (t < 1) raise(ErrorKind::DomainError, "redundancy reports require t >= 1");
    RedundancyReport report;
    report.k = f.k();
    report.t = t;
    report.family = f.tag();
    const int e = f.image_size();

    if (e < 2) {
        report.lower.push_back({"constant-function", 0, true});
        report.upper.push_back({"constant-function", 0, true});
        report.achieved = 0;
        return report;
    }

    report.lower.push_back({"image-size", static_cast<double>(clamp_pos(2 * t - 2)), true});

    // Subset lower bound via the kind-1 message matrix.
    const std::vector<BinaryWord> subset = opts.subset ? *opts.subset : representative_subset(f);
    const DistanceMatrix m1 = build_message_matrix(f, t, subset, 1);
    const PlotkinBound pk = plotkin_lower_bound(m1);
    report.lower.push_back({"plotkin-subset", static_cast<double>(pk.value), true});
    report.notes.push_back("plotkin-subset rational: " + std::to_string(pk.numerator) + "/" +
                           std::to_string(pk.denominator));
    if (opts.exact_np_bounds && m1.size() <= 8) {
        if (const auto np = exact_np(m1, Metric::Pair)) report.lower.push_back({"exact-subset", static_cast<double>(np->value), true});
    }

    // Upper bounds via the kind-2 function matrix.
    std::optional<DistanceMatrix> fm2;
    try {
        fm2 = build_function_matrix(f, t, 2);
    } catch (const Error& err) {
        report.notes.push_back(std::string("function matrix skipped: ") + err.what());
    }
    if (fm2) {
        const auto order_a = descending_row_sum_order(*fm2);
        const auto order_b = identity_order(fm2->size());
        const int gv = std::min(gv_upper_bound(*fm2, order_a, Metric::Pair),
                                gv_upper_bound(*fm2, order_b, Metric::Pair));
        report.upper.push_back({"gv-class-matrix", static_cast<double>(gv), true});
        const auto [m, dmax] = dmax_uniform_relax(*fm2);
        if (m >= 2 && dmax >= 2) {
            if (const auto uu = np_uniform_upper(m, dmax))
                report.upper.push_back({"uniform-relaxation", static_cast<double>(uu->value), true});
        }
        if (opts.exact_np_bounds && fm2->size() <= 8) {
            if (const auto np = exact_np(*fm2, Metric::Pair)) {
                report.upper.push_back({"exact-class-matrix", static_cast<double>(np->value), true});
                try {
                    const PairEncoder enc = class_encoder_from_witness(f, t, np->witness.words);
                    try_achieved(report, f, t, enc);
                } catch (const Error& err) {
                    report.notes.push_back(std::string("class encoder skipped: ") + err.what());
                }
            }
        }
    }

    if (f.tag() == "pair_weight") {
        report.lower.push_back({"adjacent-classes", static_cast<double>(2 * t - 1), true});
        if (f.k() > t) {
            const double rational =
                (20.0 * t * t * t - 20.0 * t) / (9.0 * (t + 1.0) * (t + 1.0));
            report.lower.push_back({"truncated-plotkin", rational, false});
        }
        if (t <= 3) {
            const PairEncoder enc = encode_pair_weight(f.k(), t);
            report.upper.push_back({"base-code-construction", static_cast<double>(enc.r()), true});
            try_achieved(report, f, t, enc);
        }
        if (t >= 6 && f.k() >= 2 &&
            static_cast<long long>(f.k()) <= static_cast<long long>(2 * t - 1) * (2 * t - 1)) {
            const double dd = 2.0 * t - 1.0;
            const double denom = 1.0 - 2.0 * std::sqrt(std::log(dd) / dd);
            report.upper.push_back({"log-formula", (4.0 * t - 4.0) / denom, false});
        }
    } else if (f.tag() == "weight_distribution") {
        const int T = f.dist_T();
        if (T >= 2 * t + 1 && (f.k() + 1) % T == 0) {
            const PairEncoder enc = encode_weight_distribution(f.k(), t, T);
            report.upper.push_back({"step-construction", static_cast<double>(enc.r()), true});
            try_achieved(report, f, t, enc);
        } else {
            report.notes.push_back("step construction needs T | k+1 and T >= 2t+1");
        }
    }

    // The repetition-bit construction applies to any 2t-pair-locally binary f.
    if (f.k() <= 16 && is_pair_locally_binary(f, 2 * t)) {
        report.upper.push_back({"repetition-bit", static_cast<double>(2 * t - 1), true});
        try_achieved(report, f, t, encode_locally_binary(f, t));
    }

    return report;
}

}  // namespace paircode
