#pragma once

#include <string>

#include "replisim/config.hpp"
#include "replisim/engine.hpp"

namespace replisim {

struct RenderPalette {
    std::string red = "#CC0000";
    std::string blue = "#0000CC";
    std::string green = "#00AA00";
    std::string purple = "#8800CC";
    std::string yellow = "#DDBB00";
    std::string container = "#888888";
};

struct RenderSpec {
    double scale = 4.0;    // pixels per world unit
    double margin = 8.0;   // pixels around the container
    RenderPalette palette;
};

/// SVG 1.1 frame. World y points up; the canvas is flipped to match. Field
/// circles are drawn at true radius. A bonded red-blue pair is drawn as one
/// disc over the bond, red on the half facing the red arm's codon and blue on
/// the other half.
std::string render_svg(const SimulationState& state, const SimulationConfig& cfg,
                       const RenderSpec& spec = {});

}  // namespace replisim
