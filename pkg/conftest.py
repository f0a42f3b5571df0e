import sys
from pathlib import Path

# continua, core, utils and experiments import from the checkout
sys.path.insert(0, str(Path(__file__).parent))
