import os
import sys

import django


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'umbral_rz.settings')
    django.setup()
    from bellumbra.cli import run
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
