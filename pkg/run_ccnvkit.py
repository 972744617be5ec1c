import sys

from ccnvkit.quick_start import main


if __name__ == '__main__':
    sys.exit(main())
