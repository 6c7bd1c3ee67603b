#include "algtool/report.hpp"

namespace algtool {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "PASS";
    case Outcome::Fail:
      return "FAIL";
    case Outcome::Undecided:
      return "UNDECIDED";
  }
  return "?";
}

void Report::add(Outcome o, std::string section, std::string item, std::string detail) {
  lines.push_back({o, std::move(section), std::move(item), std::move(detail)});
}

void Report::append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }

std::size_t Report::count(Outcome o) const {
  std::size_t n = 0;
  for (const auto& l : lines) n += l.outcome == o;
  return n;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string Report::render(ReportFormat format) const {
  std::string out;
  for (const auto& h : header) out += "# " + h + "\n";
  for (const auto& l : lines) {
    if (format == ReportFormat::text) {
      out += to_string(l.outcome) + " " + l.section + "/" + l.item + ": " + l.detail + "\n";
    } else {
      out += "status=" + to_string(l.outcome) + " section=" + l.section + " item=" + quoted(l.item) +
             " detail=" + quoted(l.detail) + "\n";
    }
  }
  std::string pass = std::to_string(count(Outcome::Pass)), fail = std::to_string(count(Outcome::Fail)),
              und = std::to_string(count(Outcome::Undecided));
  if (format == ReportFormat::text)
    out += "# summary: " + pass + " pass, " + fail + " fail, " + und + " undecided\n";
  else
    out += "summary pass=" + pass + " fail=" + fail + " undecided=" + und + "\n";
  return out;
}

}  // namespace algtool
