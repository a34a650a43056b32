#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmclass/cm.hpp"
#include "cmclass/geometry.hpp"
#include "cmclass/oracle.hpp"
#include "cmclass/series.hpp"

namespace cmclass {

enum class Format { Text, Csv, Json, Svg };

/// "text", "csv", "json", "svg". Throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

/// Inclusive integer range, written "a:b".
struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Throws std::invalid_argument unless the text is "a:b" with a <= b.
Window parse_window(const std::string& text);

struct Segre3Record {
  Label2 label;
  bool cm = false;
  bool conic = false;
  std::optional<Certificate> certificate;
  std::optional<oracle::SerreCertificate> serre;
};

struct Segre3Report {
  Segre3Params params;
  std::int64_t window = 0;
  /// Lexicographic over the full window.
  std::vector<Segre3Record> records;
  std::size_t cmCount = 0;
  std::size_t conicCount = 0;
  Segre3Formulas formulas;
  std::array<std::int64_t, 6> caseTallies{};
  bool genericChecked = false;
  std::vector<std::string> discrepancies;
};

struct Segre3ReportOptions {
  unsigned threads = 0;
  /// Run the generic conic enumerator as a cross-check (slow beyond 4).
  bool crossCheckGeneric = true;
  /// Non-CM classes with max(|i|,|j|) at most this radius get a Serre probe.
  std::int64_t serreRadius = 4;
};

/// Throws InvariantViolation when a conic class is not CM or a Serre
/// certificate fires on a CM class.
Segre3Report segre3_report(const Segre3Params& params, const Segre3ReportOptions& options = {});
std::string render(const Segre3Report& report, Format format, std::optional<Window> display = std::nullopt);

struct Veronese2Record {
  std::int64_t label = 0;
  bool cm = false;
  bool conic = false;
  CeilingInequalities inequalities;
  bool formulaLevel = false;
};

struct Veronese2Report {
  Veronese2Params params;
  Window window;
  BezoutPair bezout;
  std::vector<Veronese2Record> records;
  std::vector<std::int64_t> cmSet;
  Veronese2ConicComparison conic;
  Veronese2Formulas formulas;
  /// -dm+1 .. cn-1
  Window guaranteed;
  std::vector<std::int64_t> cmOutsideGuaranteed;
  std::vector<std::string> discrepancies;
};

Veronese2Report veronese2_report(const Veronese2Params& params);
std::string render(const Veronese2Report& report, Format format, std::optional<Window> display = std::nullopt);

struct HilbertReport {
  std::string expression;
  HilbertSeries series;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> r;
  std::optional<mpz_class> e;
  /// "CM", "NotCM" or "undecidable".
  std::string cm;
  Window range;
  std::vector<mpz_class> coefficients;
};

/// Parses and evaluates; ParseError propagates. Default range: ten
/// coefficients from the initial degree (or 0 for the zero series).
HilbertReport hilbert_report(const std::string& text, std::optional<Window> range = std::nullopt);
/// Svg is not available for series; throws std::invalid_argument.
std::string render(const HilbertReport& report, Format format);

}  // namespace cmclass
