#ifndef SYZKIT_SYZKIT_HPP
#define SYZKIT_SYZKIT_HPP

#include "syzkit/dense_matrix.hpp"
#include "syzkit/division.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/indexing.hpp"
#include "syzkit/instance.hpp"
#include "syzkit/instance_gen.hpp"
#include "syzkit/json_io.hpp"
#include "syzkit/krylov.hpp"
#include "syzkit/module_poly.hpp"
#include "syzkit/monomial.hpp"
#include "syzkit/mulmat.hpp"
#include "syzkit/oracle.hpp"
#include "syzkit/order.hpp"
#include "syzkit/prime_field.hpp"
#include "syzkit/staircase.hpp"
#include "syzkit/syzygy.hpp"

#endif
