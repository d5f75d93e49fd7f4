#include "cograph/report.h"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "cograph/formats.h"

namespace cograph {

namespace {

constexpr std::string_view kMagic = "cograph-report 1";

std::string SpectrumFields(const PredictedSpectrum& p) { return ToString(p); }

[[noreturn]] void Malformed(int line_no, const std::string& what) {
  throw FormatError("report line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> Split(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

int ToInt(const std::string& s, int line_no) {
  char* end = nullptr;
  const long value = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0') Malformed(line_no, "bad integer '" + s + "'");
  return static_cast<int>(value);
}

double ToDoubleField(const std::string& s, int line_no) {
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') Malformed(line_no, "bad number '" + s + "'");
  return value;
}

mpz_class ToBig(const std::string& s, int line_no) {
  mpz_class out;
  if (out.set_str(s, 10) != 0) Malformed(line_no, "bad integer '" + s + "'");
  return out;
}

PredictedSpectrum ParseSpectrum(const std::vector<std::string>& fields,
                                int line_no) {
  PredictedSpectrum p;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const auto eq = fields[i].find('=');
    if (eq == std::string::npos) Malformed(line_no, "expected key=value");
    const std::string key = fields[i].substr(0, eq);
    const int value = ToInt(fields[i].substr(eq + 1), line_no);
    if (key == "minus") {
      p.minus_lambda = value;
    } else if (key == "zero") {
      p.zero = value;
    } else if (key == "lambda") {
      p.lambda = value;
    } else if (key == "two") {
      p.two_lambda = value;
    } else {
      Malformed(line_no, "unknown spectrum key '" + key + "'");
    }
  }
  return p;
}

// Rest of the line after the first `skip` whitespace-separated tokens.
std::string Tail(std::string_view line, int skip) {
  std::size_t pos = 0;
  for (int i = 0; i < skip; ++i) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    while (pos < line.size() && line[pos] != ' ') ++pos;
  }
  if (pos < line.size() && line[pos] == ' ') ++pos;
  return std::string(line.substr(pos));
}

}  // namespace

bool RunReport::all_passed() const {
  if (verdicts.empty()) return false;
  for (const auto& v : verdicts) {
    if (!v.passed) return false;
  }
  return true;
}

std::string FormatDouble(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

std::string WriteReport(const RunReport& r) {
  std::ostringstream out;
  const int n = r.graph.order();
  out << kMagic << "\n";
  out << "input " << r.input << "\n";
  out << "order " << n << "\n";
  out << "edges";
  for (auto [u, v] : r.graph.edges()) out << " " << u << "-" << v;
  out << "\n";
  out << "cotree " << r.cotree << "\n";
  out << "lambda " << FormatDouble(r.lambda) << "\n";
  out << "twin-base " << r.sequence.base << "\n";
  for (const TwinStep& s : r.sequence.steps) {
    out << "twin-step " << s.added << " " << s.twin_of << " "
        << TwinKindName(s.kind) << "\n";
  }
  out << "cases";
  for (SynthesisCase c : r.cases) out << " " << static_cast<int>(c);
  out << "\n";
  out << "predicted " << SpectrumFields(r.predicted) << "\n";
  out << "exact-multiplicities " << SpectrumFields(r.spectrum.exact) << "\n";

  out << "[exact-entries]\n";
  for (int i = 0; i < r.matrix.dim(); ++i) {
    for (int j = i; j < r.matrix.dim(); ++j) {
      out << i + 1 << " " << j + 1 << " " << r.matrix(i, j).ToTriple() << "\n";
    }
  }
  out << "[numeric-entries]\n";
  for (int i = 0; i < r.numeric.n; ++i) {
    for (int j = i; j < r.numeric.n; ++j) {
      out << i + 1 << " " << j + 1 << " " << FormatDouble(r.numeric(i, j))
          << "\n";
    }
  }
  out << "[eigenvalues]\n";
  for (double x : r.spectrum.numeric) out << FormatDouble(x) << "\n";
  out << "max-deviation " << FormatDouble(r.spectrum.max_deviation) << "\n";
  out << "[verdicts]\n";
  for (const Verdict& v : r.verdicts) {
    out << v.check << " " << (v.passed ? "pass" : "fail");
    if (!v.detail.empty()) out << " " << v.detail;
    out << "\n";
  }
  out << "[end]\n";
  char wall[40];
  std::snprintf(wall, sizeof wall, "%.3f", r.wall_ms);
  out << "wall-time-ms " << wall << "\n";
  return out.str();
}

RunReport ParseReport(std::string_view text) {
  RunReport r;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::string section;
  bool saw_magic = false;
  int order = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;

  auto require_order = [&](int where) {
    if (order < 0) Malformed(where, "entries before 'order'");
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!saw_magic) {
      if (line != kMagic) Malformed(line_no, "missing report header");
      saw_magic = true;
      continue;
    }
    if (line.front() == '[') {
      section = line;
      continue;
    }
    const std::vector<std::string> f = Split(line);
    if (section == "[exact-entries]") {
      require_order(line_no);
      if (f.size() != 5) Malformed(line_no, "expected 'i j a b k'");
      const int i = ToInt(f[0], line_no) - 1;
      const int j = ToInt(f[1], line_no) - 1;
      const int k = ToInt(f[4], line_no);
      if (i < 0 || j < 0 || i >= order || j >= order || k < 0) {
        Malformed(line_no, "entry out of range");
      }
      ExactScalar x(ToBig(f[2], line_no), ToBig(f[3], line_no),
                    static_cast<std::uint32_t>(k));
      if (x.ToTriple() != f[2] + " " + f[3] + " " + f[4]) {
        Malformed(line_no, "entry is not in canonical form");
      }
      r.matrix(i, j) = x;
      r.matrix(j, i) = x;
    } else if (section == "[numeric-entries]") {
      require_order(line_no);
      if (f.size() != 3) Malformed(line_no, "expected 'i j value'");
      const int i = ToInt(f[0], line_no) - 1;
      const int j = ToInt(f[1], line_no) - 1;
      if (i < 0 || j < 0 || i >= order || j >= order) {
        Malformed(line_no, "entry out of range");
      }
      r.numeric(i, j) = r.numeric(j, i) = ToDoubleField(f[2], line_no);
    } else if (section == "[eigenvalues]") {
      if (f.size() == 2 && f[0] == "max-deviation") {
        r.spectrum.max_deviation = ToDoubleField(f[1], line_no);
      } else if (f.size() == 1) {
        r.spectrum.numeric.push_back(ToDoubleField(f[0], line_no));
      } else {
        Malformed(line_no, "expected an eigenvalue");
      }
    } else if (section == "[verdicts]") {
      if (f.size() < 2 || (f[1] != "pass" && f[1] != "fail")) {
        Malformed(line_no, "expected 'name pass|fail [detail]'");
      }
      r.verdicts.push_back({f[0], f[1] == "pass", Tail(line, 2)});
    } else if (section == "[end]") {
      if (f.size() == 2 && f[0] == "wall-time-ms") {
        r.wall_ms = ToDoubleField(f[1], line_no);
      }
    } else if (!section.empty()) {
      Malformed(line_no, "unknown section " + section);
    } else if (f[0] == "input") {
      r.input = Tail(line, 1);
    } else if (f[0] == "order") {
      if (f.size() != 2) Malformed(line_no, "expected 'order n'");
      order = ToInt(f[1], line_no);
      if (order < 1) Malformed(line_no, "order must be positive");
      r.matrix = ExactMatrix(order);
      r.numeric = DenseMatrix(order);
      r.sequence.order = order;
    } else if (f[0] == "edges") {
      for (std::size_t i = 1; i < f.size(); ++i) {
        const auto dash = f[i].find('-');
        if (dash == std::string::npos) Malformed(line_no, "expected u-v");
        edges.emplace_back(ToInt(f[i].substr(0, dash), line_no),
                           ToInt(f[i].substr(dash + 1), line_no));
      }
    } else if (f[0] == "cotree") {
      r.cotree = Tail(line, 1);
    } else if (f[0] == "lambda") {
      if (f.size() != 2) Malformed(line_no, "expected 'lambda x'");
      r.lambda = ToDoubleField(f[1], line_no);
    } else if (f[0] == "twin-base") {
      if (f.size() != 2) Malformed(line_no, "expected 'twin-base v'");
      r.sequence.base = ToInt(f[1], line_no);
    } else if (f[0] == "twin-step") {
      if (f.size() != 4 || (f[3] != "true" && f[3] != "false")) {
        Malformed(line_no, "expected 'twin-step added twin_of true|false'");
      }
      r.sequence.steps.push_back(
          {ToInt(f[1], line_no), ToInt(f[2], line_no),
           f[3] == "true" ? TwinKind::kTrueTwin : TwinKind::kFalseTwin});
    } else if (f[0] == "cases") {
      for (std::size_t i = 1; i < f.size(); ++i) {
        const int c = ToInt(f[i], line_no);
        if (c < 1 || c > 4) Malformed(line_no, "case must be 1..4");
        r.cases.push_back(static_cast<SynthesisCase>(c));
      }
    } else if (f[0] == "predicted") {
      r.predicted = ParseSpectrum(f, line_no);
    } else if (f[0] == "exact-multiplicities") {
      r.spectrum.exact = ParseSpectrum(f, line_no);
    } else {
      Malformed(line_no, "unknown key '" + f[0] + "'");
    }
  }
  if (!saw_magic) throw FormatError("report: empty document");
  if (order < 0) throw FormatError("report: missing 'order'");
  try {
    r.graph = Graph(order, edges);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("report: bad edge list: ") + e.what());
  }
  return r;
}

}  // namespace cograph
