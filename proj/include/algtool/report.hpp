#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace algtool {

enum class Outcome { Pass, Fail, Undecided };
std::string to_string(Outcome o);

struct ReportLine {
  Outcome outcome;
  std::string section;
  std::string item;
  std::string detail;
};

enum class ReportFormat { text, records };

class Report {
 public:
  std::vector<std::string> header;  // rendered as "# ..." lines
  std::vector<ReportLine> lines;

  void add(Outcome o, std::string section, std::string item, std::string detail);
  void append(const Report& other);
  std::size_t count(Outcome o) const;
  bool failed() const { return count(Outcome::Fail) > 0; }
  int exit_code() const { return failed() ? 1 : 0; }
  std::string render(ReportFormat format = ReportFormat::text) const;
};

}  // namespace algtool
