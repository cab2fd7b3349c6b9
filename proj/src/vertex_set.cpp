#include "locdom/vertex_set.hpp"

namespace locdom {

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace locdom
