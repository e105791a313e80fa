// Copyright 2026 The Eigenlogic Authors
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

#include "eigenlogic/serialization.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "eigenlogic/errors.hpp"

namespace eigenlogic {

namespace {

template <typename Fn>
auto guarded(std::string_view what, Fn &&fn) {
    try {
        return fn();
    } catch (const Json::exception &e) {
        throw InvalidArgumentError("malformed " + std::string(what) + " JSON: " + e.what());
    }
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<double> complex_part(const std::vector<std::complex<double>> &v, bool imag) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto &c : v) out.push_back(imag ? c.imag() : c.real());
    return out;
}

std::vector<std::complex<double>> complex_from(const Json &j) {
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != im.size()) throw InvalidArgumentError("\"re\" and \"im\" must have equal length");
    std::vector<std::complex<double>> out(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) out[i] = {re[i], im[i]};
    return out;
}

// Strip the "key:" prefix of a header line.
std::string_view header_value(std::string_view line, std::string_view key) {
    line = trim(line);
    if (line.substr(0, key.size()) != key || line.size() <= key.size() || line[key.size()] != ':') {
        throw InvalidArgumentError("truth table: expected header '" + std::string(key) + ": ...'");
    }
    return trim(line.substr(key.size() + 1));
}

}  // namespace

Json to_json(const DiagObservable &f) { return Json{{"arities", f.arities()}, {"eigenvalues", f.eigenvalues()}}; }

DiagObservable diag_observable_from_json(const Json &j) {
    return guarded("observable", [&] {
        return DiagObservable(j.at("arities").get<std::vector<std::size_t>>(),
                              j.at("eigenvalues").get<std::vector<double>>());
    });
}

Json to_json(const DenseMatrix &m) {
    return Json{{"dim", m.dim()}, {"re", complex_part(m.entries(), false)}, {"im", complex_part(m.entries(), true)}};
}

DenseMatrix dense_matrix_from_json(const Json &j) {
    return guarded("matrix", [&] { return DenseMatrix(j.at("dim").get<std::size_t>(), complex_from(j)); });
}

Json to_json(const StateVector &s) {
    return Json{{"arities", s.arities()},
                {"re", complex_part(s.amplitudes(), false)},
                {"im", complex_part(s.amplitudes(), true)}};
}

StateVector state_vector_from_json(const Json &j) {
    return guarded("state", [&] { return StateVector(j.at("arities").get<std::vector<std::size_t>>(), complex_from(j)); });
}

Json to_json(const TruthTable &t) {
    return Json{{"alphabet", t.alphabet().values()},
                {"names", t.alphabet().names()},
                {"arity", t.arity()},
                {"outputs", t.outputs()}};
}

TruthTable truth_table_from_json(const Json &j) {
    return guarded("truth table", [&] {
        std::vector<std::string> names;
        if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
        return TruthTable(ValueAlphabet(j.at("alphabet").get<std::vector<double>>(), std::move(names)),
                          j.at("arity").get<std::size_t>(), j.at("outputs").get<std::vector<double>>());
    });
}

std::string format_truth_table(const TruthTable &t) {
    std::string out = "alphabet: ";
    const auto &values = t.alphabet().values();
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ",";
        out += format_real_exact(values[k]);
    }
    out += "\narity: " + std::to_string(t.arity()) + "\n";
    // One row per value of the first argument.
    const std::size_t width = t.arity() == 0 ? 1 : t.size() / t.alphabet().size();
    for (std::size_t w = 0; w < t.size(); ++w) {
        out += format_real_exact(t.outputs()[w]);
        out += (w + 1) % width == 0 ? "\n" : " ";
    }
    return out;
}

TruthTable parse_truth_table(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = trim(text.substr(start, end - start));
        if (!line.empty()) lines.push_back(line);
        start = end + 1;
    }
    if (lines.size() < 2) throw InvalidArgumentError("truth table: expected 'alphabet:' and 'arity:' headers");

    ValueAlphabet alphabet(parse_real_list(header_value(lines[0], "alphabet")));
    const double arity_value = parse_real(header_value(lines[1], "arity"));
    if (arity_value < 0 || arity_value != static_cast<double>(static_cast<std::size_t>(arity_value))) {
        throw InvalidArgumentError("truth table: arity must be a non-negative integer");
    }

    std::vector<double> outputs;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        std::istringstream in{std::string(lines[i])};
        std::string word;
        while (in >> word) outputs.push_back(parse_real(word));
    }
    return TruthTable(std::move(alphabet), static_cast<std::size_t>(arity_value), std::move(outputs));
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x + 0.0);
    return buf;
}

std::string format_real_exact(double x) {
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, x + 0.0);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

double parse_real(std::string_view text) {
    const std::string s(trim(text));
    if (s.empty()) throw InvalidArgumentError("expected a number");
    char *end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
        throw InvalidArgumentError("not a finite number: '" + s + "'");
    }
    return v;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_real(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace eigenlogic
