import sys

from gtilde.cli import main

sys.exit(main())
