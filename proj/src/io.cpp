// Copyright 2026 The vvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "vvqe/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace vvqe {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool parse_int(std::string_view s, int& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool looks_complex(std::string_view s) {
  return s.find_first_of("jJ()") != std::string_view::npos ||
         (s.find_first_of("iI") != std::string_view::npos &&
          s.find("inf") == std::string_view::npos &&
          s.find("INF") == std::string_view::npos);
}

}  // namespace

ParseError::ParseError(const std::string& source, int line,
                       const std::string& what)
    : std::runtime_error(line > 0
                             ? source + ":" + std::to_string(line) + ": " + what
                             : source + ": " + what),
      line_(line) {}

std::string pauli_spec(const PauliString& s) { return s.sparse_label(); }

PauliString parse_pauli_spec(int n_qubits, const std::string& spec) {
  std::istringstream tokens(spec);
  std::string tok;
  std::vector<std::pair<int, Pauli>> ops;
  while (tokens >> tok) {
    Pauli p;
    switch (tok[0]) {
      case 'X': p = Pauli::X; break;
      case 'Y': p = Pauli::Y; break;
      case 'Z': p = Pauli::Z; break;
      default:
        throw std::invalid_argument("bad Pauli token '" + tok + "'");
    }
    int q = -1;
    if (tok.size() < 2 || !parse_int(std::string_view(tok).substr(1), q)) {
      throw std::invalid_argument("bad qubit index in token '" + tok + "'");
    }
    if (q < 0 || q >= n_qubits) {
      throw std::out_of_range("qubit index " + std::to_string(q) +
                              " out of range for " + std::to_string(n_qubits) +
                              " qubits");
    }
    ops.emplace_back(q, p);
  }
  return PauliString::from_ops(n_qubits, ops);
}

HamiltonianFile parse_hamiltonian(std::istream& in, const std::string& source) {
  HamiltonianFile out;
  int n_qubits = 0;
  std::vector<PauliPolynomial::Term> terms;
  std::set<PauliString> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (text[0] == '#') {
      const auto colon = text.find(':');
      if (colon == std::string::npos) continue;
      if (colon + 1 < text.size() && text[colon + 1] != ' ' &&
          text[colon + 1] != '\t') {
        continue;
      }
      const std::string key = trim(std::string_view(text).substr(1, colon - 1));
      const std::string value = trim(std::string_view(text).substr(colon + 1));
      if (key.empty() || key.find(' ') != std::string::npos) continue;
      if (key == "n_qubits") {
        if (!terms.empty()) {
          throw ParseError(source, line_no, "n_qubits after first term");
        }
        if (!parse_int(value, n_qubits) || n_qubits < 1 ||
            n_qubits > PauliString::kMaxQubits) {
          throw ParseError(source, line_no, "invalid n_qubits '" + value + "'");
        }
      }
      out.metadata[key] = value;
      continue;
    }
    if (n_qubits == 0) {
      throw ParseError(source, line_no, "term before '# n_qubits:' header");
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
      throw ParseError(source, line_no, "expected '<coefficient>, <paulis>'");
    }
    const std::string coeff_text = trim(std::string_view(text).substr(0, comma));
    double coeff = 0.0;
    if (!parse_double(coeff_text, coeff)) {
      if (looks_complex(coeff_text)) {
        throw ParseError(source, line_no,
                         "non-real coefficient '" + coeff_text + "'");
      }
      throw ParseError(source, line_no, "bad coefficient '" + coeff_text + "'");
    }
    if (!std::isfinite(coeff)) {
      throw ParseError(source, line_no, "non-finite coefficient");
    }
    PauliString s(n_qubits);
    try {
      s = parse_pauli_spec(n_qubits, text.substr(comma + 1));
    } catch (const std::exception& e) {
      throw ParseError(source, line_no, e.what());
    }
    if (!seen.insert(s).second) {
      throw ParseError(source, line_no,
                       "duplicate term '" + pauli_spec(s) + "'");
    }
    terms.emplace_back(s, coeff);
  }
  if (in.bad()) throw ParseError(source, 0, "read failure");
  if (n_qubits == 0) throw ParseError(source, 0, "missing '# n_qubits:' header");
  out.n_terms = terms.size();
  out.polynomial = PauliPolynomial(n_qubits, terms);
  return out;
}

HamiltonianFile load_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_hamiltonian(in, path);
}

void write_hamiltonian(std::ostream& out, const PauliPolynomial& h,
                       const std::map<std::string, std::string>& metadata) {
  if (!h.is_hermitian()) {
    throw std::invalid_argument("only Hermitian polynomials are serializable");
  }
  out << "# n_qubits: " << h.n_qubits() << '\n';
  for (const auto& [key, value] : metadata) {
    if (key != "n_qubits") out << "# " << key << ": " << value << '\n';
  }
  char buf[32];
  for (const auto& [s, c] : h.terms()) {
    std::snprintf(buf, sizeof(buf), "%.17g", c.real());
    out << buf << ", " << pauli_spec(s) << '\n';
  }
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << contents;
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace vvqe
