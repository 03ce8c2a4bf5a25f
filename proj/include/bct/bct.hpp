#pragma once

#include "bct/rational.hpp"
#include "bct/numtheory.hpp"
#include "bct/field.hpp"
#include "bct/quadratic.hpp"
#include "bct/finite_field.hpp"
#include "bct/poly.hpp"
#include "bct/zassenhaus.hpp"
#include "bct/factor.hpp"
#include "bct/square_class.hpp"
#include "bct/curve.hpp"
#include "bct/reduction.hpp"
#include "bct/group.hpp"
#include "bct/classification.hpp"
#include "bct/torsion.hpp"
#include "bct/growth.hpp"
#include "bct/audit.hpp"
#include "bct/parse.hpp"
#include "bct/reproduce.hpp"
#include "bct/report.hpp"
