#include "supercas/dump.hpp"

#include <json.hpp>

namespace supercas {

std::string dump_matrix_json(const SuperMatrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["parities"] = m.row_space().parities();
    auto entries = nlohmann::ordered_json::array();
    m.for_each_nz([&](std::size_t r, std::size_t c, const Rational& v) {
        entries.push_back({r, c, rat_str(v)});
    });
    j["entries"] = std::move(entries);
    return j.dump();
}

} // namespace supercas
