#include "sorth/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace sorth {

namespace {

int qubits_for_order(std::size_t order) {
  int n = 0;
  while ((std::size_t{1} << n) < order && n < 24) ++n;
  if ((std::size_t{1} << n) != order || n < 1)
    throw MalformedMatrix("order " + std::to_string(order) +
                          " is not a power of two >= 2");
  return n;
}

}  // namespace

std::string to_json(const SymbolicMatrix& m) {
  nlohmann::json cells = nlohmann::json::array();
  for (int r = 0; r < m.order(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.order(); ++c) {
      const SignedEntry& e = m(r, c);
      row.push_back(e.sign == Sign::Minus ? -(e.index + 1) : e.index + 1);
    }
    cells.push_back(std::move(row));
  }
  nlohmann::json doc{{"n", m.qubits()},
                     {"mode", m.mode() == Mode::Semi ? "semi" : "special"},
                     {"cells", std::move(cells)}};
  return doc.dump(2) + "\n";
}

SymbolicMatrix matrix_from_json(const std::string& text) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("mode") ||
        !doc.contains("cells"))
      throw MalformedMatrix("matrix JSON needs n, mode and cells");
    const int n = doc["n"].get<int>();
    const std::string mode_name = doc["mode"].get<std::string>();
    if (mode_name != "semi" && mode_name != "special")
      throw MalformedMatrix("mode must be \"semi\" or \"special\"");
    const Mode mode = mode_name == "semi" ? Mode::Semi : Mode::Special;

    SymbolicMatrix m(n, mode);
    const auto& cells = doc["cells"];
    if (!cells.is_array() || static_cast<int>(cells.size()) != m.order())
      throw MalformedMatrix("cells must hold " + std::to_string(m.order()) +
                            " rows");
    for (int r = 0; r < m.order(); ++r) {
      const auto& row = cells[r];
      if (!row.is_array() || static_cast<int>(row.size()) != m.order())
        throw MalformedMatrix("row " + std::to_string(r) + " must hold " +
                              std::to_string(m.order()) + " cells");
      for (int c = 0; c < m.order(); ++c) {
        const int v = row[c].get<int>();
        if (v == 0) throw MalformedMatrix("cell value 0 is forbidden");
        if (mode == Mode::Semi && v < 0)
          throw MalformedMatrix("semi mode forbids negative cells");
        m.set(r, c,
              SignedEntry{std::abs(v) - 1,
                          mode == Mode::Semi
                              ? Sign::Unknown
                              : (v > 0 ? Sign::Plus : Sign::Minus)});
      }
    }
    require_permutation_columns(m);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedMatrix(std::string("bad JSON: ") + e.what());
  }
}

std::string to_text(const SymbolicMatrix& m) {
  std::ostringstream os;
  for (int r = 0; r < m.order(); ++r) {
    for (int c = 0; c < m.order(); ++c) {
      const SignedEntry& e = m(r, c);
      if (c) os << ' ';
      if (e.sign == Sign::Minus) os << '-';
      os << 'a' << e.index;
    }
    os << '\n';
  }
  return os.str();
}

SymbolicMatrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::pair<int, bool>> tokens;  // (index, negative)
  std::string tok;
  bool any_minus = false;
  while (is >> tok) {
    bool neg = false;
    std::size_t p = 0;
    if (tok[p] == '-') {
      neg = true;
      ++p;
    }
    if (p >= tok.size() || tok[p] != 'a')
      throw MalformedMatrix("bad token \"" + tok + "\"");
    ++p;
    int index = 0;
    if (p >= tok.size()) throw MalformedMatrix("bad token \"" + tok + "\"");
    for (; p < tok.size(); ++p) {
      if (tok[p] < '0' || tok[p] > '9' || index > (1 << 24))
        throw MalformedMatrix("bad token \"" + tok + "\"");
      index = index * 10 + (tok[p] - '0');
    }
    any_minus |= neg;
    tokens.push_back({index, neg});
  }
  std::size_t order = 1;
  while (order * order < tokens.size()) ++order;
  if (order * order != tokens.size())
    throw MalformedMatrix("token count " + std::to_string(tokens.size()) +
                          " is not a perfect square");
  const int n = qubits_for_order(order);
  const Mode mode = any_minus ? Mode::Special : Mode::Semi;
  SymbolicMatrix m(n, mode);
  for (int r = 0; r < m.order(); ++r)
    for (int c = 0; c < m.order(); ++c) {
      const auto& [index, neg] = tokens[static_cast<std::size_t>(r) * order + c];
      m.set(r, c,
            SignedEntry{index, mode == Mode::Semi
                                   ? Sign::Unknown
                                   : (neg ? Sign::Minus : Sign::Plus)});
    }
  require_permutation_columns(m);
  return m;
}

SymbolicMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedMatrix("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (path.extension() == ".json") return matrix_from_json(buffer.str());
  return matrix_from_text(buffer.str());
}

void save_matrix(const std::filesystem::path& path, const SymbolicMatrix& m) {
  std::ofstream out(path);
  if (!out) throw MalformedMatrix("cannot write " + path.string());
  out << (path.extension() == ".json" ? to_json(m) : to_text(m));
}

}  // namespace sorth
