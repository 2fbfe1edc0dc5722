import sys

from wcdim.cli import main

sys.exit(main())
