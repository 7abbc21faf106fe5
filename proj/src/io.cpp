#include "nrb/io.hpp"

#include <fstream>
#include <stdexcept>

namespace nrb {

namespace {

using nlohmann::json;

double number_at(const json& j, const std::string& where) {
    if (!j.is_number()) throw std::invalid_argument(where + ": expected a number");
    return j.get<double>();
}

Complex entry_at(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument(where + ": expected an [re, im] pair");
    }
    return {number_at(j[0], where), number_at(j[1], where)};
}

std::size_t count_at(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0) {
        throw std::invalid_argument(where + ": expected a positive integer");
    }
    return j.get<std::size_t>();
}

json load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw std::invalid_argument("matrix document needs rows, cols and entries");
    }
    const std::size_t rows = count_at(j["rows"], "rows");
    const std::size_t cols = count_at(j["cols"], "cols");
    const json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != rows) {
        throw std::invalid_argument("entries must hold exactly " + std::to_string(rows) +
                                    " rows");
    }
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != cols) {
            throw std::invalid_argument("row " + std::to_string(i) + " must hold exactly " +
                                        std::to_string(cols) + " entries");
        }
        for (std::size_t k = 0; k < cols; ++k) {
            m(i, k) = entry_at(row[k], "entry (" + std::to_string(i) + "," + std::to_string(k) +
                                           ")");
        }
    }
    require_finite(m, "matrix document");
    return m;
}

ComplexVector vector_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
        throw std::invalid_argument("vector document needs dim and entries");
    }
    const std::size_t dim = count_at(j["dim"], "dim");
    const json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != dim) {
        throw std::invalid_argument("entries must hold exactly " + std::to_string(dim) +
                                    " pairs");
    }
    ComplexVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = entry_at(entries[i], "entry " + std::to_string(i));
    }
    require_finite(v, "vector document");
    return v;
}

BlockMatrix block_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("blocks")) {
        throw std::invalid_argument("block document needs dims and blocks");
    }
    const json& jd = j["dims"];
    if (!jd.is_array() || jd.empty()) {
        throw std::invalid_argument("dims must be a nonempty array");
    }
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < jd.size(); ++i) {
        dims.push_back(count_at(jd[i], "dims[" + std::to_string(i) + "]"));
    }
    const std::size_t n = dims.size();
    const json& jb = j["blocks"];
    if (!jb.is_array() || jb.size() != n) {
        throw std::invalid_argument("blocks must hold exactly " + std::to_string(n) + " rows");
    }
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = jb[i];
        if (!row.is_array() || row.size() != n) {
            throw std::invalid_argument("blocks row " + std::to_string(i) +
                                        " must hold exactly " + std::to_string(n) + " cells");
        }
        for (std::size_t k = 0; k < n; ++k) {
            const std::string where =
                "block (" + std::to_string(i) + "," + std::to_string(k) + ")";
            if (row[k].is_null()) {
                blocks.emplace_back(dims[i], dims[k]);
                continue;
            }
            ComplexMatrix cell = matrix_from_json(row[k]);
            if (cell.rows() != dims[i] || cell.cols() != dims[k]) {
                throw std::invalid_argument(where + " has shape " + std::to_string(cell.rows()) +
                                            "x" + std::to_string(cell.cols()) + ", expected " +
                                            std::to_string(dims[i]) + "x" +
                                            std::to_string(dims[k]));
            }
            blocks.push_back(std::move(cell));
        }
    }
    return make_block_matrix(std::move(dims), std::move(blocks));
}

json matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            row.push_back({m(i, k).real(), m(i, k).imag()});
        }
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json vector_to_json(const ComplexVector& v) {
    json entries = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) entries.push_back({v[i].real(), v[i].imag()});
    return {{"dim", v.dim()}, {"entries", std::move(entries)}};
}

json block_to_json(const BlockMatrix& t) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.n(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < t.n(); ++k) {
            if (max_abs(t.block(i, k)) == 0.0) {
                row.push_back(nullptr);
            } else {
                row.push_back(matrix_to_json(t.block(i, k)));
            }
        }
        rows.push_back(std::move(row));
    }
    return {{"dims", t.dims}, {"blocks", std::move(rows)}};
}

json real_matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).real());
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix load_matrix(const std::string& path) {
    const json doc = load_document(path);
    try {
        return matrix_from_json(doc);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

ComplexVector load_vector(const std::string& path) {
    const json doc = load_document(path);
    try {
        return vector_from_json(doc);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

BlockMatrix load_block(const std::string& path) {
    const json doc = load_document(path);
    try {
        return block_from_json(doc);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace nrb
