#include "coresets/dataset_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coresets {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool parse_double(const std::string& token, double* out) {
    try {
        std::size_t pos = 0;
        *out = std::stod(token, &pos);
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
            ++pos;
        return pos == token.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream ss(line);
    while (std::getline(ss, token, sep)) out.push_back(token);
    if (!line.empty() && line.back() == sep) out.push_back("");
    return out;
}

PointSet load_csv(std::ifstream& in, const std::string& path) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    bool header_checked = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto tokens = split(line, ',');
        std::vector<double> row;
        row.reserve(tokens.size());
        bool numeric = true;
        for (const auto& t : tokens) {
            double v;
            if (!parse_double(t, &v)) {
                numeric = false;
                break;
            }
            row.push_back(v);
        }
        if (!numeric) {
            if (!header_checked && rows.empty()) {
                header_checked = true;  // header line
                continue;
            }
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": non-numeric field");
        }
        header_checked = true;
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": ragged row (" + std::to_string(row.size()) +
                                     " columns, expected " +
                                     std::to_string(rows.front().size()) + ")");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error(path + ": empty dataset");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    return PointSet(std::move(m));
}

PointSet load_svmlight(std::ifstream& in, const std::string& path) {
    std::vector<std::vector<std::pair<std::size_t, double>>> rows;
    std::size_t max_index = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string token;
        std::vector<std::pair<std::size_t, double>> entries;
        bool first = true;
        while (ss >> token) {
            const auto colon = token.find(':');
            if (colon == std::string::npos) {
                double ignored;
                if (first && parse_double(token, &ignored)) {
                    first = false;
                    continue;  // per-line label
                }
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": expected index:value, got '" + token +
                                         "'");
            }
            first = false;
            double idx_d, val;
            if (!parse_double(token.substr(0, colon), &idx_d) ||
                !parse_double(token.substr(colon + 1), &val) || idx_d < 1.0 ||
                idx_d != std::floor(idx_d))
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": non-numeric field '" + token + "'");
            const std::size_t idx = static_cast<std::size_t>(idx_d);
            max_index = std::max(max_index, idx);
            entries.emplace_back(idx - 1, val);
        }
        rows.push_back(std::move(entries));
    }
    if (rows.empty() || max_index == 0)
        throw std::runtime_error(path + ": empty dataset");
    Matrix m(rows.size(), max_index, 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, v] : rows[i]) m(i, j) = v;
    return PointSet(std::move(m));
}

}  // namespace

PointSet load_dataset(const std::string& path, DatasetFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    switch (format) {
        case DatasetFormat::csv_dense: return load_csv(in, path);
        case DatasetFormat::svmlight_sparse: return load_svmlight(in, path);
    }
    throw std::logic_error("load_dataset: unknown format");
}

void save_dataset_csv(const std::string& path, const Matrix& points) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    for (std::size_t i = 0; i < points.rows; ++i) {
        for (std::size_t j = 0; j < points.cols; ++j) {
            if (j) out << ',';
            out << fmt(points(i, j));
        }
        out << '\n';
    }
}

void save_benchmark_metadata(const std::string& path,
                             const BenchmarkInstance& instance) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << "k = " << instance.k << "\n";
    out << "alpha = " << instance.alpha << "\n";
    out << "n = " << instance.size() << "\n";
    for (std::size_t a = 0; a < instance.alpha; ++a) {
        out << "planted_" << a << " =";
        for (std::size_t i = 0; i < instance.size(); ++i) {
            out << (i ? "," : " ") << instance.planted[a][i];
        }
        out << "\n";
    }
}

BenchmarkInstance load_benchmark_instance(const std::string& data_path,
                                          const std::string& meta_path) {
    PointSet data = load_dataset(data_path, DatasetFormat::csv_dense);
    std::ifstream in(meta_path);
    if (!in) throw std::runtime_error(meta_path + ": cannot open");

    BenchmarkInstance inst;
    inst.matrix = data.matrix();
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> planted;
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        const auto strip = [](std::string& s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.pop_back();
        };
        strip(key);
        strip(value);
        if (key == "k") {
            inst.k = std::stoul(value);
        } else if (key == "alpha") {
            inst.alpha = std::stoul(value);
        } else if (key == "n") {
            n = std::stoul(value);
        } else if (key.rfind("planted_", 0) == 0) {
            const std::size_t a = std::stoul(key.substr(8));
            std::vector<std::size_t> labels;
            for (const auto& tok : split(value, ','))
                labels.push_back(std::stoul(tok));
            planted.emplace_back(a, std::move(labels));
        }
    }
    if (inst.k < 2 || inst.alpha < 2)
        throw std::runtime_error(meta_path + ": missing k/alpha");
    if (n != 0 && n != inst.matrix.rows)
        throw std::runtime_error(meta_path + ": point count does not match dataset");
    inst.planted.assign(inst.alpha, {});
    for (auto& [a, labels] : planted) {
        if (a >= inst.alpha)
            throw std::runtime_error(meta_path + ": planted index out of range");
        if (labels.size() != inst.matrix.rows)
            throw std::runtime_error(meta_path + ": planted label count mismatch");
        inst.planted[a] = std::move(labels);
    }
    for (const auto& labels : inst.planted)
        if (labels.empty())
            throw std::runtime_error(meta_path + ": missing planted labels");
    return inst;
}

void save_coreset_csv(const std::string& path, const WeightedCoreset& coreset) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    for (std::size_t j = 0; j < coreset.dim(); ++j) out << "x" << j << ",";
    out << "weight,source_index\n";
    for (std::size_t i = 0; i < coreset.size(); ++i) {
        for (std::size_t j = 0; j < coreset.dim(); ++j)
            out << fmt(coreset.points(i, j)) << ',';
        out << fmt(coreset.weights[i]) << ',';
        if (coreset.source_indices) out << (*coreset.source_indices)[i];
        out << '\n';
    }
}

WeightedCoreset load_coreset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty coreset");
    const auto header = split(line, ',');
    if (header.size() < 3 || header[header.size() - 2] != "weight")
        throw std::runtime_error(path + ": malformed coreset header");
    const std::size_t d = header.size() - 2;

    std::vector<std::vector<double>> rows;
    std::vector<double> weights;
    std::vector<std::size_t> sources;
    bool has_sources = true;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto tokens = split(line, ',');
        if (tokens.size() != d + 2)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": ragged row");
        std::vector<double> row(d);
        for (std::size_t j = 0; j < d; ++j)
            if (!parse_double(tokens[j], &row[j]))
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": non-numeric field");
        double w;
        if (!parse_double(tokens[d], &w))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": non-numeric weight");
        rows.push_back(std::move(row));
        weights.push_back(w);
        if (tokens[d + 1].empty())
            has_sources = false;
        else
            sources.push_back(std::stoul(tokens[d + 1]));
    }
    if (rows.empty()) throw std::runtime_error(path + ": empty coreset");
    Matrix m(rows.size(), d);
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    WeightedCoreset coreset{std::move(m), std::move(weights), std::nullopt};
    if (has_sources && sources.size() == coreset.size())
        coreset.source_indices = std::move(sources);
    return coreset;
}

}  // namespace coresets
