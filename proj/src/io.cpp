#include "paircode/io.hpp"

#include <nlohmann/json.hpp>
#include <fstream>
#include <sstream>

namespace paircode::io {

namespace {

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::ParseError, "cannot open file: " + path);
    return in;
}

}  // namespace

std::vector<BinaryWord> read_words(std::istream& in) {
    std::vector<BinaryWord> words;
    std::string line;
    while (std::getline(in, line)) {
        const std::string s = strip(line);
        if (!s.empty()) words.push_back(BinaryWord::from_string(s));
    }
    return words;
}

std::vector<BinaryWord> read_words_file(const std::string& path) {
    auto in = open_input(path);
    return read_words(in);
}

void write_words(std::ostream& out, std::span<const BinaryWord> words) {
    for (const auto& w : words) out << w.to_string() << '\n';
}

json matrix_to_json(const DistanceMatrix& d) {
    return json{{"m", d.size()}, {"rows", d.rows()}};
}

DistanceMatrix matrix_from_json(const json& j) {
    if (!j.contains("rows")) raise(ErrorKind::ParseError, "matrix JSON needs a \"rows\" field");
    auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (j.contains("m") && j.at("m").get<int>() != static_cast<int>(rows.size()))
        raise(ErrorKind::ParseError, "matrix JSON \"m\" disagrees with row count");
    return DistanceMatrix(std::move(rows));
}

DistanceMatrix matrix_from_csv(std::istream& in) {
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const std::string s = strip(line);
        if (s.empty()) continue;
        std::vector<int> row;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stoi(cell));
            } catch (const std::exception&) {
                raise(ErrorKind::ParseError, "bad CSV cell: " + cell);
            }
        }
        rows.push_back(std::move(row));
    }
    return DistanceMatrix(std::move(rows));
}

DistanceMatrix load_matrix(const std::string& path) {
    auto in = open_input(path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return matrix_from_csv(in);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        raise(ErrorKind::ParseError, std::string("bad matrix JSON: ") + e.what());
    }
    return matrix_from_json(j);
}

namespace {

const char* proof_name(NpProof p) {
    switch (p) {
        case NpProof::ZeroMatrix: return "zero-matrix";
        case NpProof::LowerBound: return "lower-bound";
        case NpProof::ExhaustedBelow: return "exhausted-search";
    }
    return "unknown";
}

}  // namespace

json np_result_to_json(const NpResult& result) {
    json witness = json::array();
    for (const auto& w : result.witness.words) witness.push_back(w.to_string());
    return json{{"value", result.value},
                {"witness", witness},
                {"metric", result.witness.metric == Metric::Pair ? "pair" : "hamming"},
                {"infeasible_below", proof_name(result.proof)},
                {"searched_from", result.searched_from}};
}

json encoder_to_json(const PairEncoder& enc) {
    json j{{"family", to_string(enc.family())}, {"k", enc.k()}, {"r", enc.r()}, {"t", enc.t()}};
    switch (enc.family()) {
        case EncoderFamily::Weight: {
            json base = json::array();
            for (const auto& w : enc.base()) base.push_back(w.to_string());
            j["base"] = base;
            break;
        }
        case EncoderFamily::Dist:
            j["T"] = enc.dist_T();
            break;
        case EncoderFamily::Locally: {
            std::string bitmap(enc.locally_bits().size(), '0');
            for (std::size_t i = 0; i < bitmap.size(); ++i)
                if (enc.locally_bits()[i]) bitmap[i] = '1';
            j["bits"] = bitmap;  // indexed by message value, bit i of the message at string index i
            break;
        }
        case EncoderFamily::Generic: {
            json classes = json::object();
            for (const auto& [v, p] : enc.class_parity()) classes[std::to_string(v)] = p.to_string();
            j["classes"] = classes;
            break;
        }
    }
    return j;
}

PairEncoder encoder_from_json(const json& j, std::shared_ptr<const FunctionTable> f) {
    try {
        const EncoderFamily family = encoder_family_from_string(j.at("family").get<std::string>());
        const int k = j.at("k").get<int>();
        const int t = j.at("t").get<int>();
        switch (family) {
            case EncoderFamily::Weight: {
                std::vector<BinaryWord> base;
                for (const auto& s : j.at("base")) base.push_back(BinaryWord::from_string(s.get<std::string>()));
                return PairEncoder::weight_encoder(k, t, std::move(base));
            }
            case EncoderFamily::Dist:
                return PairEncoder::dist_encoder(k, t, j.at("T").get<int>());
            case EncoderFamily::Locally: {
                const std::string bitmap = j.at("bits").get<std::string>();
                std::vector<std::uint8_t> bits(bitmap.size());
                for (std::size_t i = 0; i < bitmap.size(); ++i) bits[i] = bitmap[i] == '1';
                return PairEncoder::locally_encoder(k, t, std::move(bits));
            }
            case EncoderFamily::Generic: {
                std::map<std::int64_t, BinaryWord> parities;
                for (const auto& [key, val] : j.at("classes").items())
                    parities.emplace(std::stoll(key), BinaryWord::from_string(val.get<std::string>()));
                if (parities.empty()) return PairEncoder::identity_encoder(k, t);
                if (!f) raise(ErrorKind::DomainError, "generic encoders need a function table to load");
                return PairEncoder::class_encoder(k, t, std::move(parities), std::move(f));
            }
        }
    } catch (const json::exception& e) {
        raise(ErrorKind::ParseError, std::string("bad encoder JSON: ") + e.what());
    }
    raise(ErrorKind::ParseError, "bad encoder JSON");
}

PairEncoder load_encoder(const std::string& path, std::shared_ptr<const FunctionTable> f) {
    auto in = open_input(path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        raise(ErrorKind::ParseError, std::string("bad encoder JSON: ") + e.what());
    }
    return encoder_from_json(j, std::move(f));
}

void save_encoder(const std::string& path, const PairEncoder& enc) {
    std::ofstream out(path);
    if (!out) raise(ErrorKind::ParseError, "cannot write file: " + path);
    out << encoder_to_json(enc).dump(2) << '\n';
}

FunctionTable function_from_stream(std::istream& in) {
    std::string line;
    int k = -1;
    std::vector<std::int64_t> values;
    std::vector<bool> seen;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        const std::string s = strip(line);
        if (s.empty()) continue;
        std::stringstream ss(s);
        std::string bits;
        std::int64_t value;
        if (!(ss >> bits >> value)) raise(ErrorKind::ParseError, "expected \"<bits> <value>\" line");
        const BinaryWord u = BinaryWord::from_string(bits);
        if (k < 0) {
            k = static_cast<int>(u.size());
            if (k > 22) raise(ErrorKind::TooLarge, "function tables are guarded at k <= 22");
            values.assign(1ULL << k, 0);
            seen.assign(1ULL << k, false);
        }
        if (static_cast<int>(u.size()) != k) raise(ErrorKind::ParseError, "messages must share one length");
        if (seen[u.value()]) raise(ErrorKind::DuplicateMessage, "message listed twice: " + bits);
        seen[u.value()] = true;
        values[u.value()] = value;
        ++count;
    }
    if (k < 0) raise(ErrorKind::ParseError, "empty function table");
    if (count != (1ULL << k)) raise(ErrorKind::ParseError, "function table must cover all 2^k messages");
    return FunctionTable(k, std::move(values), "file");
}

FunctionTable function_from_file(const std::string& path) {
    auto in = open_input(path);
    return function_from_stream(in);
}

void write_function(std::ostream& out, const FunctionTable& f) {
    for (std::uint64_t u = 0; u < f.domain_size(); ++u)
        out << BinaryWord::from_value(u, f.k()).to_string() << ' ' << f.eval(u) << '\n';
}

json report_to_json(const RedundancyReport& report) {
    auto bounds = [](const std::vector<BoundEntry>& entries) {
        json arr = json::array();
        for (const auto& e : entries) arr.push_back({{"name", e.name}, {"value", e.value}, {"exact", e.exact}});
        return arr;
    };
    json j{{"k", report.k},
           {"t", report.t},
           {"family", report.family},
           {"lower", bounds(report.lower)},
           {"upper", bounds(report.upper)},
           {"best_lower", report.best_lower()},
           {"best_upper", report.best_upper()},
           {"notes", report.notes}};
    if (report.achieved) j["achieved"] = *report.achieved;
    return j;
}

json stats_to_json(const ExperimentStats& stats) {
    return json{{"trials", stats.trials}, {"successes", stats.successes}, {"ambiguous", stats.ambiguous},
                {"t", stats.t},           {"k", stats.k},                 {"r", stats.r},
                {"family", stats.family}, {"seed", stats.seed},           {"success_rate", stats.success_rate()},
                {"wall_ms", stats.wall_ms}};
}

}  // namespace paircode::io
