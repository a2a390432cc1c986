#pragma once

#include "brauer/field.hpp"
#include "brauer/linalg.hpp"
#include "brauer/modular.hpp"
#include "brauer/permutation.hpp"
#include "brauer/diagram.hpp"
#include "brauer/diagram_io.hpp"
#include "brauer/symmetric_group.hpp"
#include "brauer/algebra.hpp"
#include "brauer/blocks.hpp"
#include "brauer/cell_module.hpp"
#include "brauer/minors.hpp"
#include "brauer/tensor_rep.hpp"
#include "brauer/temperley_lieb.hpp"
#include "brauer/report.hpp"
#include "brauer/verify.hpp"
#include "brauer/commands.hpp"
