import sys

from qwalk.main import main

sys.exit(main())
