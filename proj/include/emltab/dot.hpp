#ifndef EMLTAB_DOT_HPP
#define EMLTAB_DOT_HPP

#include <string>

#include "emltab/tableau.hpp"

namespace emltab {

/// Graphviz rendering of one phase.  States are solid boxes, prestates
/// dashed boxes; dashed edges carry no label and solid edges carry their
/// diamond.  With show_eliminated, removed states of a final graph are drawn
/// grey and tagged with the rule that removed them; otherwise they are left
/// out.
std::string to_dot(const TableauGraph& g, bool show_eliminated = false);

}  // namespace emltab

#endif  // EMLTAB_DOT_HPP
