#include "gvc/table.hpp"

#include <set>
#include <utility>

#include "gvc/errors.hpp"

namespace gvc {

IcioTable::IcioTable(std::vector<Node> nodes, Eigen::MatrixXd intermediates,
                     Eigen::MatrixXd final_demand, Eigen::VectorXd value_added,
                     Eigen::VectorXd gross_output, int year)
    : nodes_(std::move(nodes)), z_(std::move(intermediates)), f_(std::move(final_demand)),
      va_(std::move(value_added)), x_(std::move(gross_output)), year_(year) {
    const auto m = static_cast<Eigen::Index>(nodes_.size());
    if (m == 0) {
        throw StructuralError("table must have at least one node");
    }
    if (z_.rows() != m || z_.cols() != m) {
        throw StructuralError("intermediate matrix is " + std::to_string(z_.rows()) + "x" +
                              std::to_string(z_.cols()) + ", expected " + std::to_string(m) + "x" +
                              std::to_string(m));
    }
    if (va_.size() != m) {
        throw StructuralError("value-added vector has length " + std::to_string(va_.size()) +
                              ", expected " + std::to_string(m));
    }
    if (x_.size() != m) {
        throw StructuralError("gross-output vector has length " + std::to_string(x_.size()) +
                              ", expected " + std::to_string(m));
    }

    std::set<std::pair<std::string, std::string>> seen_pairs;
    node_country_.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& node = nodes_[i];
        if (!is_valid_code(node.country)) {
            throw StructuralError("invalid country code '" + node.country + "'");
        }
        if (!is_valid_code(node.sector)) {
            throw StructuralError("invalid sector code '" + node.sector + "'");
        }
        if (!is_valid_code(node.id)) {
            throw StructuralError("invalid node id '" + node.id + "'");
        }
        if (!seen_pairs.insert({node.country, node.sector}).second) {
            throw StructuralError("duplicate node (" + node.country + ", " + node.sector + ")");
        }
        if (!node_by_id_.emplace(node.id, static_cast<int>(i)).second) {
            throw StructuralError("duplicate node id '" + node.id + "'");
        }
        auto [it, inserted] =
            country_by_code_.emplace(node.country, static_cast<int>(countries_.size()));
        if (inserted) {
            countries_.push_back(node.country);
            country_nodes_.emplace_back();
        }
        node_country_[i] = it->second;
        country_nodes_[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
    }

    const auto g = static_cast<Eigen::Index>(countries_.size());
    if (f_.rows() != m || f_.cols() != g) {
        throw StructuralError("final-demand matrix is " + std::to_string(f_.rows()) + "x" +
                              std::to_string(f_.cols()) + ", expected " + std::to_string(m) + "x" +
                              std::to_string(g));
    }
}

int IcioTable::country_index(std::string_view code) const {
    auto it = country_by_code_.find(std::string(code));
    if (it == country_by_code_.end()) {
        throw LookupError("unknown country code '" + std::string(code) + "'");
    }
    return it->second;
}

bool IcioTable::has_country(std::string_view code) const {
    return country_by_code_.find(std::string(code)) != country_by_code_.end();
}

int IcioTable::find_node(std::string_view node_id) const {
    auto it = node_by_id_.find(std::string(node_id));
    return it == node_by_id_.end() ? -1 : it->second;
}

} // namespace gvc
