#pragma once

#include "catlab/catalanimal.hpp"
#include "catlab/dens.hpp"
#include "catlab/exactnum.hpp"
#include "catlab/hallittlewood.hpp"
#include "catlab/io.hpp"
#include "catlab/llt.hpp"
#include "catlab/nabla.hpp"
#include "catlab/shapes.hpp"
#include "catlab/suites.hpp"
