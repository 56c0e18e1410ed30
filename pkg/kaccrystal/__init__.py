__version__ = "0.1.0"

from .kaccrystal import crystal, verify, embed, extract, rsk, rsk_inverse, setup_crystal
from .classes.weights import Rank, Weight
from .classes.tableau import Tableau
from .classes.kac import KacCrystal, KacElement
from .classes.rsk import KappaElement
from .classes.crystal_graph import CrystalGraph
