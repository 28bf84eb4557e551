#include "tracker/matrices.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tracker {

TransitionMatrix tridiagonal_eps(int max_state, double eps) {
  if (max_state < 1) throw std::domain_error("tridiagonal family needs max_state >= 1");
  if (!(eps >= 0.0) || !(eps <= 0.5))
    throw std::domain_error("tridiagonal eps must lie in [0, 0.5]");
  const int n = max_state + 1;
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  rows[0][0] = 1.0 - eps;
  rows[0][1] = eps;
  for (int i = 1; i < n - 1; ++i) {
    rows[i][i - 1] = eps;
    rows[i][i] = 1.0 - 2.0 * eps;
    rows[i][i + 1] = eps;
  }
  rows[n - 1][n - 2] = eps;
  rows[n - 1][n - 1] = 1.0 - eps;
  return TransitionMatrix(std::move(rows));
}

TransitionMatrix banded20() {
  const int n = 20;
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  const double band[6] = {.3, .1, .2, .1, .2, .1};
  rows[0] = {.6, .1, .2, .1};
  rows[0].resize(n, 0.0);
  rows[1] = {.4, .2, .1, .2, .1};
  rows[1].resize(n, 0.0);
  rows[2] = {.3, .1, .2, .1, .2, .1};
  rows[2].resize(n, 0.0);
  for (int r = 3; r <= 17; ++r)
    for (int k = 0; k < 6; ++k) rows[r][r - 3 + k] = band[k];
  rows[18][15] = .3;
  rows[18][16] = .1;
  rows[18][17] = .2;
  rows[18][18] = .1;
  rows[18][19] = .3;
  rows[19][16] = .3;
  rows[19][17] = .1;
  rows[19][18] = .2;
  rows[19][19] = .4;
  return TransitionMatrix(std::move(rows));
}

TransitionMatrix load_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<double> row;
    std::string token;
    while (fields >> token) {
      double value = 0.0;
      const auto result = std::from_chars(token.data(), token.data() + token.size(), value);
      if (result.ec != std::errc() || result.ptr != token.data() + token.size()) {
        std::ostringstream msg;
        msg << "line " << line_no << ": '" << token << "' is not a number";
        throw std::invalid_argument(msg.str());
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix source holds no rows");
  return TransitionMatrix(std::move(rows));
}

TransitionMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  try {
    return load_matrix(in);
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument(path + ": " + err.what());
  }
}

void save_matrix(std::ostream& out, const TransitionMatrix& matrix) {
  char buf[64];
  for (int i = 0; i < matrix.size(); ++i) {
    const auto& row = matrix.row(i);
    for (int j = 0; j < matrix.size(); ++j) {
      const auto end = std::to_chars(buf, buf + sizeof(buf), row[j]).ptr;
      if (j > 0) out << ' ';
      out.write(buf, end - buf);
    }
    out << '\n';
  }
}

}  // namespace tracker
