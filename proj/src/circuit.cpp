#include "tilesim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tilesim/errors.hpp"

namespace tilesim {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

struct NamedGateInfo {
  const char* name;
  int arity;
  int params;
};

constexpr NamedGateInfo kNamedGates[] = {
    {"x", 1, 0},  {"y", 1, 0},   {"z", 1, 0},    {"h", 1, 0},
    {"s", 1, 0},  {"sdg", 1, 0}, {"t", 1, 0},    {"tdg", 1, 0},
    {"rx", 1, 1}, {"ry", 1, 1},  {"rz", 1, 1},   {"u3", 1, 3},
    {"cx", 2, 0}, {"cz", 2, 0},  {"cp", 2, 1},   {"swap", 2, 0},
    {"ccx", 3, 0},
};

const NamedGateInfo* find_named(const std::string& name) {
  for (const auto& info : kNamedGates)
    if (name == info.name)
      return &info;
  return nullptr;
}

GateMatrix mat1(cplx a, cplx b, cplx c, cplx d) {
  GateMatrix m(1);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

// Matrix in argument order: index bit 0 = first argument qubit.
GateMatrix named_matrix_arg_order(const std::string& name,
                                  const std::vector<double>& p) {
  const cplx i{0.0, 1.0};
  if (name == "x")
    return mat1(0, 1, 1, 0);
  if (name == "y")
    return mat1(0, -i, i, 0);
  if (name == "z")
    return mat1(1, 0, 0, -1);
  if (name == "h")
    return mat1(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
  if (name == "s")
    return mat1(1, 0, 0, i);
  if (name == "sdg")
    return mat1(1, 0, 0, -i);
  if (name == "t")
    return mat1(1, 0, 0, std::polar(1.0, kPi / 4.0));
  if (name == "tdg")
    return mat1(1, 0, 0, std::polar(1.0, -kPi / 4.0));
  if (name == "rx") {
    const double c = std::cos(p[0] / 2.0), s = std::sin(p[0] / 2.0);
    return mat1(c, -i * s, -i * s, c);
  }
  if (name == "ry") {
    const double c = std::cos(p[0] / 2.0), s = std::sin(p[0] / 2.0);
    return mat1(c, -s, s, c);
  }
  if (name == "rz")
    return mat1(std::polar(1.0, -p[0] / 2.0), 0, 0, std::polar(1.0, p[0] / 2.0));
  if (name == "u3") {
    const double c = std::cos(p[0] / 2.0), s = std::sin(p[0] / 2.0);
    return mat1(c, -std::polar(1.0, p[2]) * s, std::polar(1.0, p[1]) * s,
                std::polar(1.0, p[1] + p[2]) * c);
  }
  if (name == "cx") {
    // bit 0 = control, bit 1 = target
    GateMatrix m(2);
    m.at(0, 0) = 1;
    m.at(2, 2) = 1;
    m.at(3, 1) = 1;
    m.at(1, 3) = 1;
    return m;
  }
  if (name == "cz") {
    GateMatrix m(2);
    m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = 1;
    m.at(3, 3) = -1;
    return m;
  }
  if (name == "cp") {
    GateMatrix m(2);
    m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = 1;
    m.at(3, 3) = std::polar(1.0, p[0]);
    return m;
  }
  if (name == "swap") {
    GateMatrix m(2);
    m.at(0, 0) = m.at(3, 3) = 1;
    m.at(1, 2) = m.at(2, 1) = 1;
    return m;
  }
  if (name == "ccx") {
    // bits 0,1 = controls, bit 2 = target
    GateMatrix m(3);
    for (uint64_t in = 0; in < 8; ++in) {
      const uint64_t out = ((in & 3) == 3) ? (in ^ 4) : in;
      m.at(out, in) = 1;
    }
    return m;
  }
  throw std::invalid_argument("unknown gate name: " + name);
}

} // namespace

int named_gate_arity(const std::string& name) {
  const NamedGateInfo* info = find_named(name);
  return info ? info->arity : 0;
}

int named_gate_param_count(const std::string& name) {
  const NamedGateInfo* info = find_named(name);
  return info ? info->params : 0;
}

Gate make_named_gate(const std::string& name, const std::vector<double>& params,
                     const std::vector<int>& qubits) {
  const NamedGateInfo* info = find_named(name);
  if (!info)
    throw std::invalid_argument("unknown gate name: " + name);
  if (static_cast<int>(qubits.size()) != info->arity)
    throw std::invalid_argument(name + " expects " +
                                std::to_string(info->arity) + " qubit(s)");
  if (static_cast<int>(params.size()) != info->params)
    throw std::invalid_argument(name + " expects " +
                                std::to_string(info->params) + " parameter(s)");
  return make_gate_arg_order(named_matrix_arg_order(name, params), qubits, name,
                             params);
}

namespace {

// Tokenizer for one line, tracking 1-based columns.
struct LineScanner {
  const std::string& text;
  int line_no;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  int column() const { return static_cast<int>(pos) + 1; }

  // Next whitespace-delimited token; empty if none.
  std::string next_token(int* col = nullptr) {
    skip_ws();
    if (col)
      *col = column();
    const size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t')
      ++pos;
    return text.substr(start, pos - start);
  }
};

long parse_int(const std::string& token, int line, int col, const char* what) {
  char* end = nullptr;
  const long v = std::strtol(token.c_str(), &end, 10);
  if (end != token.c_str() + token.size() || token.empty())
    throw ParseError(std::string("expected ") + what + ", got '" + token + "'",
                     line, col);
  return v;
}

double parse_real(const std::string& token, int line, int col) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || token.empty())
    throw ParseError("expected a number, got '" + token + "'", line, col);
  return v;
}

int parse_qubit(const std::string& token, int n_qubits, int line, int col) {
  const long q = parse_int(token, line, col, "a qubit index");
  if (q < 0 || q >= n_qubits)
    throw ParseError("qubit index " + std::to_string(q) +
                         " out of range for " + std::to_string(n_qubits) +
                         " qubit(s)",
                     line, col);
  return static_cast<int>(q);
}

std::string strip_comment(const std::string& line) {
  const size_t hash = line.find('#');
  std::string out = (hash == std::string::npos) ? line : line.substr(0, hash);
  if (!out.empty() && out.back() == '\r')
    out.pop_back();
  return out;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace

Circuit parse_circuit(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty())
      lines.push_back(cur);
  }

  Circuit circuit;
  bool have_header = false;
  size_t li = 0;

  auto next_content_line = [&](bool required, const char* what) -> int {
    while (li < lines.size()) {
      const std::string stripped = strip_comment(lines[li]);
      bool blank = true;
      for (char ch : stripped)
        blank = blank && (ch == ' ' || ch == '\t');
      if (!blank)
        return static_cast<int>(li);
      ++li;
    }
    if (required)
      throw ParseError(std::string("unexpected end of input, expected ") + what,
                       static_cast<int>(lines.size()) + 1);
    return -1;
  };

  while (true) {
    const int idx = next_content_line(!have_header, "'qubits <n>' header");
    if (idx < 0)
      break;
    ++li;
    const std::string content = strip_comment(lines[idx]);
    const int line_no = idx + 1;
    LineScanner scan{content, line_no};

    int col = 0;
    std::string head = scan.next_token(&col);

    if (!have_header) {
      if (head != "qubits")
        throw ParseError("file must start with 'qubits <n>'", line_no, col);
      int ncol = 0;
      const std::string ntok = scan.next_token(&ncol);
      const long n = parse_int(ntok, line_no, ncol, "a qubit count");
      if (n < 1 || n > 62)
        throw ParseError("qubit count must be in [1, 62]", line_no, ncol);
      if (!scan.at_end())
        throw ParseError("trailing tokens after qubit count", line_no,
                         scan.column());
      circuit.n_qubits = static_cast<int>(n);
      have_header = true;
      continue;
    }

    if (head == "qubits")
      throw ParseError("duplicate 'qubits' header", line_no, col);

    if (head == "matrix") {
      int kcol = 0;
      const std::string ktok = scan.next_token(&kcol);
      const long k = parse_int(ktok, line_no, kcol, "a gate size");
      if (k < 1 || k > kFusedQubitCap)
        throw ParseError("matrix gate size must be in [1, " +
                             std::to_string(kFusedQubitCap) + "]",
                         line_no, kcol);
      std::vector<int> qubits;
      for (long j = 0; j < k; ++j) {
        int qcol = 0;
        const std::string qtok = scan.next_token(&qcol);
        qubits.push_back(parse_qubit(qtok, circuit.n_qubits, line_no, qcol));
      }
      if (!scan.at_end())
        throw ParseError("trailing tokens after matrix header", line_no,
                         scan.column());

      const uint64_t dim = uint64_t{1} << k;
      GateMatrix m(static_cast<int>(k));
      for (uint64_t r = 0; r < dim; ++r) {
        const int ridx = next_content_line(true, "a matrix row");
        ++li;
        const std::string row = strip_comment(lines[ridx]);
        LineScanner rs{row, ridx + 1};
        for (uint64_t c = 0; c < dim; ++c) {
          int ecol = 0;
          const std::string etok = rs.next_token(&ecol);
          const size_t comma = etok.find(',');
          if (comma == std::string::npos)
            throw ParseError("expected 're,im' entry", ridx + 1, ecol);
          const double re = parse_real(etok.substr(0, comma), ridx + 1, ecol);
          const double im = parse_real(etok.substr(comma + 1), ridx + 1,
                                       ecol + static_cast<int>(comma) + 1);
          m.at(r, c) = cplx{re, im};
        }
        if (!rs.at_end())
          throw ParseError("too many entries in matrix row", ridx + 1,
                           rs.column());
      }
      if (!m.finite())
        throw ParseError("matrix has non-finite entries", line_no, col);
      if (!is_unitary(m, 1e-10))
        throw ParseError("matrix is not unitary (tolerance 1e-10)", line_no,
                         col);
      try {
        circuit.gates.push_back(make_gate_arg_order(m, qubits));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, col);
      }
      continue;
    }

    // Named gate line: name may carry a parenthesized parameter list.
    std::string name = head;
    std::vector<double> params;
    const size_t paren = head.find('(');
    if (paren != std::string::npos) {
      if (head.back() != ')')
        throw ParseError("unterminated parameter list", line_no,
                         col + static_cast<int>(head.size()));
      name = head.substr(0, paren);
      std::string plist = head.substr(paren + 1, head.size() - paren - 2);
      size_t start = 0;
      int pcol = col + static_cast<int>(paren) + 1;
      while (true) {
        const size_t comma = plist.find(',', start);
        const std::string ptok = plist.substr(
            start, comma == std::string::npos ? std::string::npos
                                              : comma - start);
        params.push_back(parse_real(ptok, line_no, pcol + static_cast<int>(start)));
        if (comma == std::string::npos)
          break;
        start = comma + 1;
      }
    }

    const NamedGateInfo* info = find_named(name);
    if (!info)
      throw ParseError("unknown gate name '" + name + "'", line_no, col);
    if (static_cast<int>(params.size()) != info->params)
      throw ParseError(name + " expects " + std::to_string(info->params) +
                           " parameter(s), got " + std::to_string(params.size()),
                       line_no, col);

    std::vector<int> qubits;
    for (int j = 0; j < info->arity; ++j) {
      int qcol = 0;
      const std::string qtok = scan.next_token(&qcol);
      if (qtok.empty())
        throw ParseError(name + " expects " + std::to_string(info->arity) +
                             " qubit(s)",
                         line_no, qcol);
      qubits.push_back(parse_qubit(qtok, circuit.n_qubits, line_no, qcol));
    }
    if (!scan.at_end())
      throw ParseError("trailing tokens after gate line", line_no,
                       scan.column());

    try {
      circuit.gates.push_back(make_named_gate(name, params, qubits));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no, col);
    }
  }

  return circuit;
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n_qubits << "\n";
  for (const Gate& g : c.gates) {
    if (!g.name.empty()) {
      out << g.name;
      if (!g.params.empty()) {
        out << '(';
        for (size_t j = 0; j < g.params.size(); ++j) {
          if (j)
            out << ',';
          out << fmt_double(g.params[j]);
        }
        out << ')';
      }
      // Named gates were sorted into target order at construction; their
      // matrices already reflect it, so emitting sorted targets round-trips.
      for (int q : g.targets)
        out << ' ' << q;
      out << "\n";
    } else {
      out << "matrix " << g.k();
      for (int q : g.targets)
        out << ' ' << q;
      out << "\n";
      const uint64_t dim = g.matrix.dim();
      for (uint64_t r = 0; r < dim; ++r) {
        for (uint64_t col = 0; col < dim; ++col) {
          if (col)
            out << ' ';
          const cplx& e = g.matrix.at(r, col);
          out << fmt_double(e.real()) << ',' << fmt_double(e.imag());
        }
        out << "\n";
      }
    }
  }
  return out.str();
}

Circuit load_circuit_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open circuit file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_circuit(buf.str());
}

void save_circuit_file(const Circuit& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw SimError("cannot write circuit file: " + path);
  out << serialize_circuit(c);
}

} // namespace tilesim
