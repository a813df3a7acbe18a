#pragma once

#include <nlohmann/json_fwd.hpp>
#include <iosfwd>
#include <string>
#include <vector>

#include "paircode/channel.hpp"
#include "paircode/fcspc.hpp"
#include "paircode/irregular.hpp"

namespace paircode::io {

using json = nlohmann::json;

/// Word files: one 0/1 string per line, '#' starts a comment, blanks ignored.
std::vector<BinaryWord> read_words(std::istream& in);
std::vector<BinaryWord> read_words_file(const std::string& path);
void write_words(std::ostream& out, std::span<const BinaryWord> words);

/// Matrices: JSON {"m": M, "rows": [[...], ...]} or CSV rows.
json matrix_to_json(const DistanceMatrix& d);
DistanceMatrix matrix_from_json(const json& j);
DistanceMatrix matrix_from_csv(std::istream& in);
/// Dispatches on extension (.json / .csv), defaulting to JSON.
DistanceMatrix load_matrix(const std::string& path);

json np_result_to_json(const NpResult& result);

json encoder_to_json(const PairEncoder& enc);
/// Generic class encoders need their function table to evaluate messages.
PairEncoder encoder_from_json(const json& j, std::shared_ptr<const FunctionTable> f = nullptr);
PairEncoder load_encoder(const std::string& path, std::shared_ptr<const FunctionTable> f = nullptr);
void save_encoder(const std::string& path, const PairEncoder& enc);

/// Function tables: one "<bits> <value>" line per message; every message of
/// Z_2^k must appear exactly once.
FunctionTable function_from_stream(std::istream& in);
FunctionTable function_from_file(const std::string& path);
void write_function(std::ostream& out, const FunctionTable& f);

json report_to_json(const RedundancyReport& report);
json stats_to_json(const ExperimentStats& stats);

}  // namespace paircode::io
