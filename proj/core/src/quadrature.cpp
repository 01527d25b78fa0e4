#include "kinflow/quadrature.hpp"

namespace kinflow {

namespace {

const double kNodes1[] = {0.0};
const double kWts1[] = {1.0};
const double kNodes2[] = {-0.2886751345948128823, 0.2886751345948128823};
const double kWts2[] = {0.5, 0.5};
const double kNodes3[] = {-0.3872983346207416885, 0.0, 0.3872983346207416885};
const double kWts3[] = {0.2777777777777777778, 0.4444444444444444444,
                        0.2777777777777777778};
const double kNodes4[] = {-0.4305681557970262876, -0.1699905217924281324,
                          0.1699905217924281324, 0.4305681557970262876};
const double kWts4[] = {0.1739274225687269287, 0.3260725774312730713,
                        0.3260725774312730713, 0.1739274225687269287};
const double kNodes5[] = {-0.4530899229693319964, -0.2692346550528415455, 0.0,
                          0.2692346550528415455, 0.4530899229693319964};
const double kWts5[] = {0.1184634425280945438, 0.239314335249683234,
                        0.2844444444444444444, 0.239314335249683234,
                        0.1184634425280945438};
const double kNodes6[] = {-0.4662347571015760139, -0.3306046932331322568,
                          -0.1193095930415984543, 0.1193095930415984543,
                          0.3306046932331322568, 0.4662347571015760139};
const double kWts6[] = {0.08566224618958517252, 0.1803807865240693038,
                        0.2339569672863455237, 0.2339569672863455237,
                        0.1803807865240693038, 0.08566224618958517252};

const double* kNodes[] = {kNodes1, kNodes2, kNodes3, kNodes4, kNodes5, kNodes6};
const double* kWts[] = {kWts1, kWts2, kWts3, kWts4, kWts5, kWts6};

}  // namespace

QuadratureRule gauss_rule(int n_points) {
  if (n_points < 1 || n_points > 6) throw UnsupportedOrder();
  QuadratureRule r;
  r.nodes.assign(kNodes[n_points - 1], kNodes[n_points - 1] + n_points);
  r.weights.assign(kWts[n_points - 1], kWts[n_points - 1] + n_points);
  return r;
}

}  // namespace kinflow
