#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "demazure/histogram.hpp"
#include "demazure/measure.hpp"
#include "demazure/weyl.hpp"

namespace demazure {

enum class Format { Json, Csv, Tsv };

std::optional<Format> parse_format(std::string_view text);

/// JSON: {"m", "n", "word", "entries": [{"a", "b", "mult"}]} with mult as a
/// decimal string. CSV/TSV: header a,b,mult and one row per entry.
/// Entries are written in (a, b) order.
std::string write_measure(const SignedMeasure& mu, const WeylWord& word, Format format);

struct ParsedMeasure {
  SignedMeasure measure;
  WeylWord word;
};

/// Inverse of write_measure(..., Format::Json). Throws std::invalid_argument
/// on malformed input.
ParsedMeasure read_measure_json(std::string_view text);

/// Inverse of the CSV/TSV writer; the table carries no highest weight, so the
/// caller supplies it.
SignedMeasure read_measure_table(std::string_view text, const HighestWeight& hw, Format format);

/// JSON: {"<value>": "<mult>", ...}. CSV/TSV: header `<label>,mult`.
/// Rows ascend by value.
std::string write_histogram(const Histogram& h, Format format, std::string_view label = "value");

Histogram read_histogram_json(std::string_view text);

}  // namespace demazure
