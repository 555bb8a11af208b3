#!/usr/bin/env python3
"""
Environment Setup Script
Writes a .env template with the workbench limits and defaults
"""

import os

from config import SETTINGS

DESCRIPTIONS = {
    'RAINBOW_ORACLE_MAX_N': 'Largest n the O(n^2) enumeration oracle accepts without override',
    'RAINBOW_EXHAUSTIVE_MAX_N': 'Largest n exhaustive search accepts without --override',
    'RAINBOW_ERROR_BUDGET_K': 'K of every K * n error budget in the verification checks',
    'RAINBOW_THREADS': 'Default worker processes for searches',
    'RAINBOW_SEED': 'Default root seed for local-search restarts',
    'RAINBOW_BUDGET': 'Default move evaluations per local-search restart',
    'RAINBOW_RESTARTS': 'Default number of random restarts',
    'RAINBOW_FFT_MIN_N': 'n from which the convolution path uses a checked FFT',
}


def env_template() -> str:
    """Template text listing every setting at its default"""
    lines = ["# Rainbow AP workbench configuration", "# Every key is optional; defaults are shown", ""]
    for env_name, default in SETTINGS.values():
        lines.append(f"# {DESCRIPTIONS.get(env_name, env_name)}")
        lines.append(f"{env_name}={default}")
        lines.append("")
    return "\n".join(lines)


def create_env_file():
    """Create .env.example and, if wanted, .env from the template"""
    content = env_template()

    if not os.path.exists('.env.example'):
        with open('.env.example', 'w', encoding='utf-8') as f:
            f.write(content)
        print("✅ Created .env.example template file")

    if os.path.exists('.env'):
        response = input("📁 .env file already exists. Overwrite? (y/N): ").lower()
        if response != 'y':
            print("💡 Keeping existing .env file")
            return

    try:
        with open('.env', 'w', encoding='utf-8') as f:
            f.write(content)
        print("✅ Created .env file from template")
    except OSError as e:
        print(f"❌ Error creating .env file: {e}")


def check_gitignore():
    """Check if .gitignore includes .env"""
    if not os.path.exists('.gitignore'):
        print("⚠️  .gitignore file not found")
        return

    with open('.gitignore', 'r', encoding='utf-8') as f:
        content = f.read()

    if '.env' in content:
        print("✅ .env is already in .gitignore")
    else:
        response = input("📝 Add .env to .gitignore? (Y/n): ").lower()
        if response != 'n':
            with open('.gitignore', 'a', encoding='utf-8') as f:
                f.write('\n# Environment files\n.env\n')
            print("✅ Added .env to .gitignore")


def main():
    """Main setup function"""
    print("🚀 Setting up workbench configuration...")
    print("=" * 60)

    if not os.path.exists('config.py'):
        print("❌ Please run this script from the project root directory")
        return

    create_env_file()
    check_gitignore()

    print("\n📋 Next Steps:")
    print("1. Edit .env to change limits (all keys are optional)")
    print("2. Check the effective values with: python main.py config")


if __name__ == "__main__":
    main()
