// records.hpp - Versioned text records for classification results
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef REGULA_RECORDS_HPP
#define REGULA_RECORDS_HPP

#include "regula/classifier.hpp"

#include <string>

namespace regula {

/// Everything a classification run produced: echoed inputs, verdict,
/// condition report and timing. Render/parse round-trip losslessly.
struct OutputRecord {
  SystemParams params;
  Verdict verdict;
  ConditionReport report;
  long long elapsed_us = 0;
};

std::string render_record(const OutputRecord& rec);
OutputRecord parse_record(const std::string& text);  // throws std::runtime_error
bool record_equal(const OutputRecord& a, const OutputRecord& b);

}  // namespace regula

#endif
