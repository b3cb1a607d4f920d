#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "gvc/node.hpp"

namespace gvc {

// Inter-country input-output system for one year.
//
// With M nodes (country-sector pairs) and G countries:
//   Z  : M x M  intermediate flows, Z(i,j) = sales from node i to node j
//   F  : M x G  final demand by destination country
//   va : M      value added per node
//   x  : M      gross output per node
//
// Node order is authoritative: it fixes matrix storage and every summation
// order in downstream computations. The country list is the sequence of
// distinct country codes in order of first appearance; column r of F is
// demand from countries()[r]. Sector counts may differ by country.
class IcioTable {
  public:
    IcioTable(std::vector<Node> nodes, Eigen::MatrixXd intermediates,
              Eigen::MatrixXd final_demand, Eigen::VectorXd value_added,
              Eigen::VectorXd gross_output, int year);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int country_count() const { return static_cast<int>(countries_.size()); }
    int year() const { return year_; }

    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& countries() const { return countries_; }
    const std::string& country(int r) const { return countries_[static_cast<std::size_t>(r)]; }

    const Eigen::MatrixXd& intermediates() const { return z_; }
    const Eigen::MatrixXd& final_demand() const { return f_; }
    const Eigen::VectorXd& value_added() const { return va_; }
    const Eigen::VectorXd& gross_output() const { return x_; }

    // Throws LookupError for unknown codes.
    int country_index(std::string_view code) const;
    bool has_country(std::string_view code) const;

    // Node positions belonging to one country, in node order.
    const std::vector<int>& country_nodes(int country_idx) const {
        return country_nodes_[static_cast<std::size_t>(country_idx)];
    }

    // Country index of node i.
    int node_country(int i) const { return node_country_[static_cast<std::size_t>(i)]; }

    int find_node(std::string_view node_id) const; // -1 when absent

  private:
    std::vector<Node> nodes_;
    std::vector<std::string> countries_;
    std::vector<std::vector<int>> country_nodes_;
    std::vector<int> node_country_;
    std::unordered_map<std::string, int> node_by_id_;
    std::unordered_map<std::string, int> country_by_code_;
    Eigen::MatrixXd z_;
    Eigen::MatrixXd f_;
    Eigen::VectorXd va_;
    Eigen::VectorXd x_;
    int year_;
};

} // namespace gvc
