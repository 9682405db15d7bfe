// Copyright 2026 The weylgate Authors
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

#ifndef WEYLGATE_PLOT_H
#define WEYLGATE_PLOT_H

#include <iosfwd>
#include <string>
#include <vector>

namespace weylgate {

struct Series {
    std::string label;
    std::vector<double> y;
};

/// Minimal SVG 1.1 line plot: axes with min/max tick labels, one polyline per
/// series and a legend. All series share the x values.
void write_svg_plot(std::ostream &out, const std::string &title, const std::string &x_label,
                    const std::string &y_label, const std::vector<double> &x, const std::vector<Series> &series);

}  // namespace weylgate

#endif
