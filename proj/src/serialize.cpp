#include "demazure/serialize.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace demazure {

namespace {

using ordered_json = nlohmann::ordered_json;

char separator(Format format) { return format == Format::Tsv ? '\t' : ','; }

BigInt parse_bigint(const std::string& text) {
  BigInt v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return v;
}

std::int64_t parse_int(const std::string& text) {
  return to_int64(parse_bigint(text));
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

std::optional<Format> parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "tsv") return Format::Tsv;
  return std::nullopt;
}

std::string write_measure(const SignedMeasure& mu, const WeylWord& word, Format format) {
  if (format == Format::Json) {
    ordered_json doc;
    doc["m"] = mu.highest_weight().m();
    doc["n"] = mu.highest_weight().n();
    doc["word"] = word.to_string();
    doc["entries"] = ordered_json::array();
    for (const auto& [w, c] : mu.entries()) {
      doc["entries"].push_back(ordered_json{{"a", w.a}, {"b", w.b}, {"mult", c.get_str()}});
    }
    return doc.dump(2) + "\n";
  }
  const char sep = separator(format);
  std::string out = std::string("a") + sep + "b" + sep + "mult\n";
  for (const auto& [w, c] : mu.entries()) {
    out += std::to_string(w.a) + sep + std::to_string(w.b) + sep + c.get_str() + "\n";
  }
  return out;
}

ParsedMeasure read_measure_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
    HighestWeight hw(doc.at("m").get<std::int64_t>(), doc.at("n").get<std::int64_t>());
    WeylWord word = WeylWord::parse(doc.at("word").get<std::string>());
    SignedMeasure mu(hw);
    for (const auto& e : doc.at("entries")) {
      const WeightCoord w{e.at("a").get<std::int64_t>(), e.at("b").get<std::int64_t>()};
      if (mu.at(w) != 0) throw std::invalid_argument("duplicate entry in measure");
      mu.add(w, parse_bigint(e.at("mult").get<std::string>()));
    }
    return {std::move(mu), std::move(word)};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed measure JSON: ") + e.what());
  }
}

SignedMeasure read_measure_table(std::string_view text, const HighestWeight& hw, Format format) {
  if (format == Format::Json) throw std::invalid_argument("use read_measure_json for JSON input");
  const char sep = separator(format);
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || split(line, sep) != std::vector<std::string>{"a", "b", "mult"}) {
    throw std::invalid_argument("measure table must start with header a,b,mult");
  }
  SignedMeasure mu(hw);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, sep);
    if (cells.size() != 3) throw std::invalid_argument("measure row needs 3 cells: '" + line + "'");
    mu.add({parse_int(cells[0]), parse_int(cells[1])}, parse_bigint(cells[2]));
  }
  return mu;
}

std::string write_histogram(const Histogram& h, Format format, std::string_view label) {
  if (format == Format::Json) {
    ordered_json doc = ordered_json::object();
    for (const auto& [v, c] : h.bins()) doc[std::to_string(v)] = c.get_str();
    return doc.dump(2) + "\n";
  }
  const char sep = separator(format);
  std::string out = std::string(label) + sep + "mult\n";
  for (const auto& [v, c] : h.bins()) out += std::to_string(v) + sep + c.get_str() + "\n";
  return out;
}

Histogram read_histogram_json(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    if (!doc.is_object()) throw std::invalid_argument("histogram JSON must be an object");
    Histogram h;
    for (const auto& [key, val] : doc.items()) h.add(parse_int(key), parse_bigint(val.get<std::string>()));
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed histogram JSON: ") + e.what());
  }
}

}  // namespace demazure
